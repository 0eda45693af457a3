#pragma once

#include <string>
#include <vector>

#include "paracolor/algebra.hpp"

namespace paracolor {

// Primitive two-particle lift g (x) 1 + 1 (x) g with the braided tensor
// product supplying the crossing signs.
GradedMatrix lift_primitive(const GradedMatrix& g, const BilinearForm& form,
                            const BasisGrading& basis1);

// Product of primitive lifts for named generators, left to right. Names
// outside the primitive generator list are rejected.
GradedMatrix lift_word(const AlgebraSpec& spec,
                       const std::vector<std::string>& names);

// Scalar factor relating the lifted square to the doubled operator:
// lift(g)^2 = factor * (g (x) g). Requires g^2 = 0.
Poly pauli_coefficient(const GradedMatrix& g, const BilinearForm& form,
                       const BasisGrading& basis1);

// (lift (x) id) and (id (x) lift) agree on every primitive generator.
bool coassociativity_check(const AlgebraSpec& spec);

// Integer ray: coordinates cleared of denominators, coprime, first
// nonzero entry positive.
struct StateRay {
  std::vector<Int> v;

  static StateRay canonical(const std::vector<Rational>& raw);
  size_t dim() const { return v.size(); }
  std::vector<size_t> support() const;  // 0-based indices
  bool operator==(const StateRay& o) const { return v == o.v; }
  bool operator!=(const StateRay& o) const { return v != o.v; }
  std::string str() const;
};

struct EnergyLevel {
  Poly energy;
  std::vector<StateRay> rays;
};

struct HilbertSpace2 {
  std::string label;
  std::vector<EnergyLevel> levels;  // ascending energy

  size_t dim() const;
  const EnergyLevel* find_level(const Poly& energy) const;
};

// Span of all primitive generator words applied to the two-particle
// vacuum, organised per energy level. Rays within a level are
// orthogonalised exactly in word arrival order (words grown breadth
// first over the generator list).
HilbertSpace2 hilbert_space(const AlgebraSpec& spec);
// Memoised per catalog label; also accepts the bare pair-member names
// LA_min, LS_min, CLA_min, CLS_min.
const HilbertSpace2& hilbert_space_cached(const std::string& label);

using SpectrumFingerprint = std::vector<std::pair<Poly, size_t>>;
SpectrumFingerprint fingerprint(const HilbertSpace2& space);

std::vector<Rational> vacuum2();
std::vector<Poly> apply_poly(const GradedMatrix& m,
                             const std::vector<Rational>& v);
// For matrices with constant entries only.
std::vector<Rational> apply_const(const GradedMatrix& m,
                                  const std::vector<Rational>& v);

std::string hilbert_str(const HilbertSpace2& space);
HilbertSpace2 parse_hilbert(std::string_view text, const std::string& label);

}  // namespace paracolor
