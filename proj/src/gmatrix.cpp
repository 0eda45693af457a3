#include "paracolor/gmatrix.hpp"

#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

BasisGrading BasisGrading::standard4() {
  BasisGrading b;
  for (uint32_t i = 0; i < 4; ++i) b.grades.push_back(GradeWord{2, i});
  return b;
}

BasisGrading BasisGrading::kron(const BasisGrading& a, const BasisGrading& b) {
  BasisGrading out;
  out.grades.reserve(a.dim() * b.dim());
  for (const GradeWord& ga : a.grades)
    for (const GradeWord& gb : b.grades) out.grades.push_back(ga + gb);
  return out;
}

uint32_t BasisGrading::arity() const {
  ensure(!grades.empty(), ErrorKind::Internal, "empty basis grading");
  return grades.front().n;
}

GradedMatrix GradedMatrix::zero(size_t dim, GradeWord grade) {
  GradedMatrix m;
  m.dim = dim;
  m.grade = grade;
  m.a.assign(dim * dim, Poly());
  return m;
}

GradedMatrix GradedMatrix::identity(size_t dim, uint32_t arity) {
  GradedMatrix m = zero(dim, GradeWord::zero(arity));
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = Poly(1);
  return m;
}

bool GradedMatrix::is_zero() const {
  for (const Poly& p : a)
    if (!p.is_zero()) return false;
  return true;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  if (dim != o.dim) return false;
  if (is_zero() && o.is_zero()) return true;
  return grade == o.grade && a == o.a;
}

GradeWord infer_grade(const std::vector<Poly>& entries,
                      const BasisGrading& basis) {
  const size_t dim = basis.dim();
  ensure(entries.size() == dim * dim, ErrorKind::DimensionMismatch,
         "entry count does not match basis dimension");
  GradeWord grade = GradeWord::zero(basis.arity());
  bool found = false;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      if (entries[i * dim + j].is_zero()) continue;
      const GradeWord g = basis.grades[i] + basis.grades[j];
      if (!found) {
        grade = g;
        found = true;
      } else {
        ensure(g == grade, ErrorKind::InhomogeneousMatrix,
               "entries at mixed sectors " + grade.str() + " and " + g.str());
      }
    }
  return grade;
}

GradedMatrix make_graded(std::vector<Poly> entries, const BasisGrading& basis) {
  GradedMatrix m;
  m.grade = infer_grade(entries, basis);
  m.dim = basis.dim();
  m.a = std::move(entries);
  return m;
}

namespace {

void check_same_shape(const GradedMatrix& x, const GradedMatrix& y) {
  ensure(x.dim == y.dim, ErrorKind::DimensionMismatch,
         std::to_string(x.dim) + " vs " + std::to_string(y.dim));
  ensure(x.grade.n == y.grade.n, ErrorKind::ArityMismatch,
         "mixed grading arities");
}

}  // namespace

GradedMatrix mat_add(const GradedMatrix& x, const GradedMatrix& y) {
  check_same_shape(x, y);
  // The zero matrix is a member of every sector.
  ensure(x.grade == y.grade || x.is_zero() || y.is_zero(),
         ErrorKind::GradeMismatch,
         "adding sectors " + x.grade.str() + " and " + y.grade.str());
  GradedMatrix out = x;
  if (out.is_zero()) out.grade = y.grade;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

GradedMatrix mat_sub(const GradedMatrix& x, const GradedMatrix& y) {
  return mat_add(x, mat_scale(Poly(-1), y));
}

GradedMatrix mat_scale(const Poly& c, const GradedMatrix& x) {
  GradedMatrix out = x;
  for (Poly& p : out.a) p *= c;
  return out;
}

GradedMatrix mat_multiply(const GradedMatrix& x, const GradedMatrix& y,
                          const BasisGrading& basis) {
  check_same_shape(x, y);
  ensure(x.dim == basis.dim(), ErrorKind::DimensionMismatch,
         "matrix does not act on the given basis");
  GradedMatrix out = GradedMatrix::zero(x.dim, x.grade + y.grade);
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t k = 0; k < x.dim; ++k) {
      const Poly& xe = x.at(i, k);
      if (xe.is_zero()) continue;
      for (size_t j = 0; j < x.dim; ++j) {
        const Poly& ye = y.at(k, j);
        if (ye.is_zero()) continue;
        out.at(i, j) += xe * ye;
      }
    }
  for (size_t i = 0; i < out.dim; ++i)
    for (size_t j = 0; j < out.dim; ++j)
      if (!out.at(i, j).is_zero())
        ensure(basis.grades[i] + basis.grades[j] == out.grade,
               ErrorKind::InhomogeneousMatrix,
               "product left its sector");
  return out;
}

GradedMatrix dagger(const GradedMatrix& x) {
  GradedMatrix out = GradedMatrix::zero(x.dim, x.grade);
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t j = 0; j < x.dim; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

GradedMatrix graded_kron(const GradedMatrix& x, const GradedMatrix& y,
                         const BilinearForm& form, const BasisGrading& basis_x,
                         const BasisGrading& basis_y) {
  ensure(x.dim == basis_x.dim() && y.dim == basis_y.dim(),
         ErrorKind::DimensionMismatch, "factors do not act on their bases");
  ensure(form.arity() == x.grade.n && form.arity() == y.grade.n,
         ErrorKind::ArityMismatch, "form arity does not match grades");
  GradedMatrix out = GradedMatrix::zero(x.dim * y.dim, x.grade + y.grade);
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t j = 0; j < x.dim; ++j) {
      const Poly& xe = x.at(i, j);
      if (xe.is_zero()) continue;
      const int sign = form.koszul(y.grade, basis_x.grades[j]);
      const Poly sxe = sign < 0 ? -xe : xe;
      for (size_t k = 0; k < y.dim; ++k)
        for (size_t l = 0; l < y.dim; ++l) {
          const Poly& ye = y.at(k, l);
          if (ye.is_zero()) continue;
          out.at(i * y.dim + k, j * y.dim + l) = sxe * ye;
        }
    }
  return out;
}

EvalResult evaluate(const GradedMatrix& x, const Rational& at) {
  EvalResult r;
  r.dim = x.dim;
  r.a.reserve(x.a.size());
  for (const Poly& p : x.a) r.a.push_back(p.eval(at));
  r.out_of_regime = at <= 1;
  return r;
}

std::set<Rational> collision_set(const std::vector<Poly>& energies) {
  std::set<Rational> out;
  for (const Poly& e : energies)
    ensure(e.degree() <= 1, ErrorKind::NonLinearEnergy,
           "energy " + e.str() + " is not affine");
  for (size_t i = 0; i < energies.size(); ++i)
    for (size_t j = i + 1; j < energies.size(); ++j) {
      const Poly d = energies[i] - energies[j];
      if (d.is_zero() || d.degree() == 0) continue;
      out.insert(Rational(-d.coeff(0) / d.coeff(1)));
    }
  return out;
}

std::string matrix_str(const GradedMatrix& x) {
  std::ostringstream out;
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t j = 0; j < x.dim; ++j) {
      if (j) out << ' ';
      out << x.at(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Poly> parse_matrix_entries(std::string_view text, size_t dim) {
  std::istringstream in{std::string(text)};
  std::vector<Poly> entries;
  std::string tok;
  while (in >> tok) entries.push_back(Poly::parse(tok));
  ensure(entries.size() == dim * dim, ErrorKind::ParseError,
         "expected " + std::to_string(dim * dim) + " entries, got " +
             std::to_string(entries.size()));
  return entries;
}

}  // namespace paracolor
