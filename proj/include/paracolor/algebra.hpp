#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracolor/gmatrix.hpp"

namespace paracolor {

enum class OscKind { Fermionic, Parafermionic };

// Two coupled ladder pairs on the 4-dimensional graded space plus the
// central element. The pairs differ by the sign the second ladder picks
// up on the top transition: -1 for the fermionic set, +1 for the
// parafermionic one.
struct OscillatorSet {
  OscKind kind;
  GradedMatrix ann1, cre1;  // unit energy quantum
  GradedMatrix ann2, cre2;  // coupling-weighted quantum
  GradedMatrix central;
};

// Builds the set and asserts its defining relations as matrix identities.
OscillatorSet build_oscillators(OscKind kind);

// H = cre1*ann1 + l*cre2*ann2 = diag(0, l, 1, l+1). Both oscillator
// kinds produce the same matrix; asserted.
GradedMatrix build_hamiltonian();

// (x, y) = xy - (-1)^{<grade x, grade y>} yx
GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y,
                            const BilinearForm& form,
                            const BasisGrading& basis);

struct JacobiReport {
  bool ok = true;
  std::string detail;  // first failing triple if any
};
JacobiReport jacobi_check(const std::vector<GradedMatrix>& gens,
                          const BilinearForm& form, const BasisGrading& basis);

// One recorded bracket relation among generators: (gi, gj) equals the
// stated combination, with the bracket symbol (commutator vs
// anticommutator) that the defining form assigns to the pair.
struct Relation {
  size_t i = 0, j = 0;
  bool anti = false;
  std::vector<std::pair<size_t, Poly>> rhs;  // generator index, coefficient
};

struct AlgebraSpec {
  std::string label;
  OscKind kind;
  BilinearForm form;
  BasisGrading basis;
  std::vector<std::string> gen_names;
  std::vector<GradedMatrix> gens;
  std::vector<size_t> primitive;  // indices into gens
  std::vector<Relation> relations;
  std::vector<std::string> aliases;
  std::string classification;  // low-dimensional type, metadata only

  // Energy step of each generator: (H, g) = step * g.
  std::vector<Poly> energy_step;

  size_t gen_index(std::string_view name) const;
};

const std::vector<std::string>& catalog_labels();
// Accepts catalog labels and their aliases.
const AlgebraSpec& catalog(std::string_view label);

struct ClosureReport {
  bool closed = true;
  bool relations_ok = true;
  bool jacobi_ok = true;
  std::string detail;
};
// Checks every pairwise bracket lands in the generator span, replays the
// recorded relations (bracket symbol included), and runs the Jacobi scan.
ClosureReport closure_check(const AlgebraSpec& spec);

std::string osc_kind_name(OscKind kind);

}  // namespace paracolor
