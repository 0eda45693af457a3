#include "paracolor/algebra.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "paracolor/errors.hpp"

namespace paracolor {

std::string osc_kind_name(OscKind kind) {
  return kind == OscKind::Fermionic ? "fermionic" : "parafermionic";
}

namespace {

GradedMatrix from_units(const BasisGrading& basis,
                        std::initializer_list<std::tuple<size_t, size_t, long>>
                            units) {
  std::vector<Poly> entries(basis.dim() * basis.dim(), Poly());
  for (const auto& [i, j, v] : units) entries[i * basis.dim() + j] = Poly(v);
  return make_graded(std::move(entries), basis);
}

GradedMatrix plain_comm(const GradedMatrix& x, const GradedMatrix& y,
                        const BasisGrading& basis) {
  return mat_sub(mat_multiply(x, y, basis), mat_multiply(y, x, basis));
}

GradedMatrix plain_anti(const GradedMatrix& x, const GradedMatrix& y,
                        const BasisGrading& basis) {
  return mat_add(mat_multiply(x, y, basis), mat_multiply(y, x, basis));
}

}  // namespace

OscillatorSet build_oscillators(OscKind kind) {
  const BasisGrading basis = BasisGrading::standard4();
  const long eps = kind == OscKind::Fermionic ? -1 : 1;
  OscillatorSet s{kind,
                  from_units(basis, {{0, 2, 1}, {1, 3, 1}}),
                  from_units(basis, {{2, 0, 1}, {3, 1, 1}}),
                  from_units(basis, {{0, 1, 1}, {2, 3, eps}}),
                  from_units(basis, {{1, 0, 1}, {3, 2, eps}}),
                  GradedMatrix::identity(4, 2)};
  const std::vector<const GradedMatrix*> all = {&s.ann1, &s.cre1, &s.ann2,
                                                &s.cre2, &s.central};
  auto check = [&](bool ok, const char* what) {
    ensure(ok, ErrorKind::Internal,
           std::string("oscillator relation failed: ") + what);
  };
  for (const GradedMatrix* z : {&s.ann1, &s.cre1, &s.ann2, &s.cre2})
    check(plain_anti(*z, *z, basis).is_zero(), "ladder squares vanish");
  check(plain_anti(s.ann1, s.cre1, basis) == s.central, "first ladder pair");
  check(plain_anti(s.ann2, s.cre2, basis) == s.central, "second ladder pair");
  for (const auto& [x, y] :
       {std::pair{&s.ann1, &s.ann2}, std::pair{&s.ann1, &s.cre2},
        std::pair{&s.cre1, &s.ann2}, std::pair{&s.cre1, &s.cre2}}) {
    const GradedMatrix cross = kind == OscKind::Fermionic
                                   ? plain_anti(*x, *y, basis)
                                   : plain_comm(*x, *y, basis);
    check(cross.is_zero(), "cross relations");
  }
  for (const GradedMatrix* z : all)
    check(plain_comm(s.central, *z, basis).is_zero(), "central element");
  return s;
}

GradedMatrix build_hamiltonian() {
  const BasisGrading basis = BasisGrading::standard4();
  GradedMatrix h;
  for (OscKind kind : {OscKind::Fermionic, OscKind::Parafermionic}) {
    const OscillatorSet s = build_oscillators(kind);
    const GradedMatrix n1 = mat_multiply(s.cre1, s.ann1, basis);
    const GradedMatrix n2 = mat_multiply(s.cre2, s.ann2, basis);
    const GradedMatrix hk = mat_add(n1, mat_scale(Poly::lambda(), n2));
    if (kind == OscKind::Fermionic) {
      h = hk;
    } else {
      ensure(h == hk, ErrorKind::Internal,
             "oscillator kinds disagree on the energy operator");
    }
  }
  const Poly l = Poly::lambda();
  const std::vector<Poly> diag = {Poly(0), l, Poly(1), l + Poly(1)};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      ensure(h.at(i, j) == (i == j ? diag[i] : Poly()), ErrorKind::Internal,
             "energy operator is not the expected diagonal");
  return h;
}

GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y,
                            const BilinearForm& form,
                            const BasisGrading& basis) {
  const int sign = form.koszul(x.grade, y.grade);
  const GradedMatrix xy = mat_multiply(x, y, basis);
  const GradedMatrix yx = mat_multiply(y, x, basis);
  return sign < 0 ? mat_add(xy, yx) : mat_sub(xy, yx);
}

JacobiReport jacobi_check(const std::vector<GradedMatrix>& gens,
                          const BilinearForm& form,
                          const BasisGrading& basis) {
  JacobiReport report;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      for (size_t k = 0; k < gens.size(); ++k) {
        const GradedMatrix& a = gens[i];
        const GradedMatrix& b = gens[j];
        const GradedMatrix& c = gens[k];
        auto cyc = [&](const GradedMatrix& x, const GradedMatrix& y,
                       const GradedMatrix& z) {
          const int s = form.koszul(x.grade, z.grade);
          const GradedMatrix inner =
              graded_bracket(x, graded_bracket(y, z, form, basis), form,
                             basis);
          return s < 0 ? mat_scale(Poly(-1), inner) : inner;
        };
        GradedMatrix sum = cyc(a, b, c);
        sum = mat_add(sum, cyc(b, c, a));
        sum = mat_add(sum, cyc(c, a, b));
        if (!sum.is_zero()) {
          report.ok = false;
          report.detail = "triple (" + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(k) + ")";
          return report;
        }
      }
  return report;
}

size_t AlgebraSpec::gen_index(std::string_view name) const {
  for (size_t k = 0; k < gen_names.size(); ++k)
    if (gen_names[k] == name) return k;
  fail(ErrorKind::UnknownLabel,
       "no generator named '" + std::string(name) + "' in " + label);
}

namespace {

// Energy step e with (H, g) = e * g; g must have constant entries.
Poly energy_step_of(const GradedMatrix& h, const GradedMatrix& g,
                    const BilinearForm& form, const BasisGrading& basis) {
  const GradedMatrix br = graded_bracket(h, g, form, basis);
  if (br.is_zero()) return Poly();
  for (size_t k = 0; k < g.a.size(); ++k) {
    if (g.a[k].is_zero()) continue;
    ensure(g.a[k].is_constant(), ErrorKind::Internal,
           "generator entries must be constant to read off the step");
    const Poly step = br.a[k] * Poly(Rational(1) / g.a[k].coeff(0));
    ensure(br == mat_scale(step, g), ErrorKind::Internal,
           "generator is not an energy eigenoperator");
    return step;
  }
  fail(ErrorKind::Internal, "unreachable");
}

struct RelationSeed {
  size_t i, j;
  bool anti;
  std::vector<std::pair<size_t, Poly>> rhs;
};

AlgebraSpec make_spec(const std::string& label, OscKind kind,
                      const std::string& form_name, bool minimal,
                      std::vector<RelationSeed> seeds,
                      std::vector<std::string> aliases,
                      std::string classification) {
  AlgebraSpec spec{label,
                   kind,
                   BilinearForm::preset(form_name),
                   BasisGrading::standard4(),
                   {},
                   {},
                   {},
                   {},
                   std::move(aliases),
                   std::move(classification),
                   {}};
  const OscillatorSet osc = build_oscillators(kind);
  const char prefix = kind == OscKind::Fermionic ? 'f' : 'p';
  spec.gen_names = {"H", std::string(1, prefix) + "1+",
                    std::string(1, prefix) + "2+"};
  spec.gens = {build_hamiltonian(), osc.cre1, osc.cre2};
  if (minimal) {
    spec.gen_names.push_back(std::string(1, prefix) + "3+");
    spec.gens.push_back(mat_multiply(osc.cre1, osc.cre2, spec.basis));
  }
  for (size_t k = 0; k < spec.gens.size(); ++k) spec.primitive.push_back(k);
  const Poly l = Poly::lambda();
  std::vector<RelationSeed> all = {{0, 1, false, {{1, Poly(1)}}},
                                   {0, 2, false, {{2, l}}}};
  if (minimal) all.push_back({0, 3, false, {{3, l + Poly(1)}}});
  for (auto& s : seeds) all.push_back(std::move(s));
  for (const auto& s : all)
    spec.relations.push_back(Relation{s.i, s.j, s.anti, s.rhs});
  for (const GradedMatrix& g : spec.gens)
    spec.energy_step.push_back(
        energy_step_of(spec.gens[0], g, spec.form, spec.basis));
  return spec;
}

std::vector<AlgebraSpec> build_catalog() {
  using K = OscKind;
  const Poly two(2);
  std::vector<AlgebraSpec> out;
  // Minimal presentations: H with both ladder raises and their product.
  out.push_back(make_spec("fLA_min", K::Fermionic, "LA", true,
                          {{1, 2, false, {{3, two}}},
                           {1, 3, false, {}},
                           {2, 3, false, {}}},
                          {}, ""));
  out.push_back(make_spec("fLS_min", K::Fermionic, "LS", true,
                          {{1, 1, true, {}},
                           {2, 2, true, {}},
                           {1, 2, true, {}},
                           {1, 3, false, {}},
                           {2, 3, false, {}}},
                          {}, ""));
  out.push_back(make_spec("fCLA_min", K::Fermionic, "CLA", true,
                          {{1, 2, true, {}},
                           {2, 3, true, {}},
                           {3, 1, true, {}}},
                          {}, "A8(l, l+1)"));
  out.push_back(make_spec("fCLS_min", K::Fermionic, "CLS", true,
                          {{1, 1, true, {}},
                           {2, 2, true, {}},
                           {1, 2, false, {{3, two}}},
                           {1, 3, true, {}},
                           {2, 3, true, {}}},
                          {}, "S21(l)"));
  out.push_back(make_spec("pLA_min", K::Parafermionic, "LA", true,
                          {{1, 2, false, {}},
                           {2, 3, false, {}},
                           {3, 1, false, {}}},
                          {}, ""));
  out.push_back(make_spec("pLS_min", K::Parafermionic, "LS", true,
                          {{1, 1, true, {}},
                           {2, 2, true, {}},
                           {1, 2, true, {{3, two}}},
                           {1, 3, false, {}},
                           {2, 3, false, {}}},
                          {}, ""));
  out.push_back(make_spec("pCLA_min", K::Parafermionic, "CLA", true,
                          {{1, 2, true, {{3, two}}},
                           {1, 3, true, {}},
                           {2, 3, true, {}}},
                          {}, "A6((l-1)/(2*(l+1)))"));
  out.push_back(make_spec("pCLS_min", K::Parafermionic, "CLS", true,
                          {{1, 1, true, {}},
                           {2, 2, true, {}},
                           {1, 2, false, {}},
                           {1, 3, true, {}},
                           {2, 3, true, {}}},
                          {}, "S18(l, l+1)"));
  // Closed subalgebras on H and the two raises alone; these exist exactly
  // where the raise pair bracket vanishes.
  out.push_back(make_spec("fLS_sub", K::Fermionic, "LS", false,
                          {{1, 1, true, {}}, {2, 2, true, {}}, {1, 2, true, {}}},
                          {}, ""));
  out.push_back(make_spec("fCLA_sub", K::Fermionic, "CLA", false,
                          {{1, 2, true, {}}}, {"fLA_sub"}, ""));
  out.push_back(make_spec("pLA_sub", K::Parafermionic, "LA", false,
                          {{1, 2, false, {}}}, {"pCLA_sub"}, ""));
  out.push_back(make_spec("pCLS_sub", K::Parafermionic, "CLS", false,
                          {{1, 1, true, {}}, {2, 2, true, {}}, {1, 2, false, {}}},
                          {}, ""));
  return out;
}

const std::vector<AlgebraSpec>& catalog_store() {
  static const std::vector<AlgebraSpec> store = build_catalog();
  return store;
}

}  // namespace

const std::vector<std::string>& catalog_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const AlgebraSpec& s : catalog_store()) out.push_back(s.label);
    return out;
  }();
  return labels;
}

const AlgebraSpec& catalog(std::string_view label) {
  for (const AlgebraSpec& s : catalog_store()) {
    if (s.label == label) return s;
    for (const std::string& alias : s.aliases)
      if (alias == label) return s;
  }
  fail(ErrorKind::UnknownLabel,
       "no catalog entry '" + std::string(label) + "'");
}

namespace {

// Membership of B in the generator span with coefficients polynomial in
// the coupling, solved degree by degree.
bool in_generator_span(const GradedMatrix& b,
                       const std::vector<GradedMatrix>& gens) {
  constexpr int kCoeffDeg = 2;
  const size_t cols = gens.size() * (kCoeffDeg + 1);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (size_t e = 0; e < b.a.size(); ++e) {
    int deg = b.a[e].degree();
    for (const GradedMatrix& g : gens)
      deg = std::max(deg, g.a[e].degree() + kCoeffDeg);
    for (int d = 0; d <= deg; ++d) {
      std::vector<Rational> row(cols, Rational(0));
      for (size_t k = 0; k < gens.size(); ++k)
        for (int dc = 0; dc <= kCoeffDeg; ++dc)
          if (d - dc >= 0)
            row[k * (kCoeffDeg + 1) + static_cast<size_t>(dc)] =
                gens[k].a[e].coeff(d - dc);
      rows.push_back(std::move(row));
      rhs.push_back(b.a[e].coeff(d));
    }
  }
  return linalg::solve(std::move(rows), std::move(rhs), cols).has_value();
}

}  // namespace

ClosureReport closure_check(const AlgebraSpec& spec) {
  ClosureReport report;
  const JacobiReport jac = jacobi_check(spec.gens, spec.form, spec.basis);
  if (!jac.ok) {
    report.jacobi_ok = false;
    report.detail = "jacobi failed at " + jac.detail;
  }
  for (size_t i = 0; i < spec.gens.size() && report.closed; ++i)
    for (size_t j = i; j < spec.gens.size(); ++j) {
      const GradedMatrix br =
          graded_bracket(spec.gens[i], spec.gens[j], spec.form, spec.basis);
      if (br.is_zero()) continue;
      if (!in_generator_span(br, spec.gens)) {
        report.closed = false;
        report.detail = "bracket (" + spec.gen_names[i] + ", " +
                        spec.gen_names[j] + ") leaves the span";
        break;
      }
    }
  for (const Relation& r : spec.relations) {
    const bool anti_actual =
        spec.form.value(spec.gens[r.i].grade, spec.gens[r.j].grade) == 1;
    if (anti_actual != r.anti) {
      report.relations_ok = false;
      report.detail = "bracket symbol for (" + spec.gen_names[r.i] + ", " +
                      spec.gen_names[r.j] + ") disagrees with the form";
      break;
    }
    const GradedMatrix br =
        graded_bracket(spec.gens[r.i], spec.gens[r.j], spec.form, spec.basis);
    GradedMatrix expect =
        GradedMatrix::zero(br.dim, br.grade);
    for (const auto& [k, c] : r.rhs)
      expect = mat_add(expect, mat_scale(c, spec.gens[k]));
    if (br != expect) {
      report.relations_ok = false;
      report.detail = "relation (" + spec.gen_names[r.i] + ", " +
                      spec.gen_names[r.j] + ") does not hold";
      break;
    }
  }
  return report;
}

}  // namespace paracolor
