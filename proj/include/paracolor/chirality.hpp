#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracolor/multiparticle.hpp"

namespace paracolor {

// A catalog pair whose members share the spectrum but may differ in
// relative signs of degenerate-level rays.
struct PairInfo {
  std::string name;      // e.g. "LS_min-CLS_min"
  std::string ordinary;  // plain-statistics member
  std::string colored;
  bool discriminable;  // false when the distinguishing levels are absent
};

const std::vector<PairInfo>& pair_table();
const PairInfo& pair_info(std::string_view name);

struct RayPair {
  Poly level;
  StateRay ordinary;
  StateRay colored;
};

// The two members' rays at a nondegenerate shared level. Errors when the
// level is missing, carries more than one ray, or the rays agree.
RayPair sign_pair(std::string_view pair_name, const Poly& level);

// Symmetric idempotent acting on the listed coordinates (0-based,
// ascending) of the ambient space; zero elsewhere.
struct Projector {
  std::vector<size_t> support;
  std::vector<std::vector<Rational>> p;  // dense over support

  size_t rank_dim() const { return support.size(); }
};

enum class Verdict { Discriminable, Indistinguishable };

struct Discrimination {
  Verdict verdict;
  // On success: rank-one projectors onto the two rays over their joint
  // support. plus fixes the first ray and kills the second.
  std::optional<Projector> plus, minus;
  // On failure: |<u,v>|^2 / (<u,u><v,v>), plus its square root when that
  // is rational.
  Rational overlap_sq;
  std::optional<Rational> overlap;
};

Discrimination discriminate(const StateRay& u, const StateRay& v);

// Independent decision procedure for the same question: solves the full
// linear system for a symmetric P with P u = u, P v = 0 by exact
// elimination, then either certifies infeasibility or verifies an
// explicit witness (including idempotence) against every constraint.
struct OracleResult {
  bool exists = false;
  std::optional<std::vector<std::vector<Rational>>> witness;
};
OracleResult projector_oracle(const StateRay& u, const StateRay& v);

// Allowed positions for zero-sector observables on the two-particle
// space: entry (i, j) may be nonzero only when basis grades i and j
// agree. Returned as a 16x16 0/1 table.
const std::vector<std::vector<int>>& observable_pattern16();

// Places the projector at its support inside the 16-dimensional space,
// zero outside, and checks the result against the pattern.
GradedMatrix embed_observable(const Projector& proj);

// 1 when obs fixes the state, 0 when it annihilates it; anything else is
// not a sharp measurement and errors.
int measure(const StateRay& state, const GradedMatrix& obs);

}  // namespace paracolor
