#pragma once

#include <set>
#include <string>
#include <vector>

#include "paracolor/grading.hpp"
#include "paracolor/poly.hpp"

namespace paracolor {

// Grades attached to the basis vectors of a representation space.
struct BasisGrading {
  std::vector<GradeWord> grades;

  // n=2 single particle space: four basis vectors in sector order
  // 00, 10, 01, 11.
  static BasisGrading standard4();
  // Tensor product grading, index (i,k) -> i*dim(b) + k, grade sum.
  static BasisGrading kron(const BasisGrading& a, const BasisGrading& b);

  size_t dim() const { return grades.size(); }
  uint32_t arity() const;
  bool operator==(const BasisGrading& o) const { return grades == o.grades; }
};

// Square matrix with polynomial entries, homogeneous of a single grade:
// every nonzero entry (i, j) satisfies grade(i) + grade(j) = grade.
struct GradedMatrix {
  size_t dim = 0;
  GradeWord grade;
  std::vector<Poly> a;  // row-major

  static GradedMatrix zero(size_t dim, GradeWord grade);
  static GradedMatrix identity(size_t dim, uint32_t arity);

  Poly& at(size_t i, size_t j) { return a[i * dim + j]; }
  const Poly& at(size_t i, size_t j) const { return a[i * dim + j]; }
  bool is_zero() const;
  bool operator==(const GradedMatrix& o) const;
  bool operator!=(const GradedMatrix& o) const { return !(*this == o); }
};

// Grade of a homogeneous matrix over the given basis grading; the zero
// matrix reports the zero grade.
GradeWord infer_grade(const std::vector<Poly>& entries,
                      const BasisGrading& basis);
GradedMatrix make_graded(std::vector<Poly> entries, const BasisGrading& basis);

GradedMatrix mat_add(const GradedMatrix& x, const GradedMatrix& y);
GradedMatrix mat_sub(const GradedMatrix& x, const GradedMatrix& y);
GradedMatrix mat_scale(const Poly& c, const GradedMatrix& x);
// Product grade is the sum of grades; homogeneity is re-checked against
// the basis.
GradedMatrix mat_multiply(const GradedMatrix& x, const GradedMatrix& y,
                          const BasisGrading& basis);
// Transpose; entries are real polynomials so this is the adjoint.
GradedMatrix dagger(const GradedMatrix& x);

// Graded tensor product. Column j of x contributes the crossing sign
// (-1)^{<grade(y), grade_a[j]>}, the unique placement for which
// (x (x) y) (u (x) v) = (-1)^{<grade(y), grade(u)>} (xu) (x) (yv).
GradedMatrix graded_kron(const GradedMatrix& x, const GradedMatrix& y,
                         const BilinearForm& form, const BasisGrading& basis_x,
                         const BasisGrading& basis_y);

struct EvalResult {
  size_t dim = 0;
  std::vector<Rational> a;
  // Couplings at or below 1 collapse or reorder the spectrum layout the
  // engine assumes; flagged, not rejected.
  bool out_of_regime = false;
};
EvalResult evaluate(const GradedMatrix& x, const Rational& at);

// All couplings at which two of the listed energies collide. Energies
// must be affine in l.
std::set<Rational> collision_set(const std::vector<Poly>& energies);

std::string matrix_str(const GradedMatrix& x);
// Whitespace table of polynomial entries, one row per line.
std::vector<Poly> parse_matrix_entries(std::string_view text, size_t dim);

}  // namespace paracolor
