#include "paracolor/multiparticle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

GradedMatrix lift_primitive(const GradedMatrix& g, const BilinearForm& form,
                            const BasisGrading& basis1) {
  const GradedMatrix one = GradedMatrix::identity(basis1.dim(), form.arity());
  return mat_add(graded_kron(g, one, form, basis1, basis1),
                 graded_kron(one, g, form, basis1, basis1));
}

GradedMatrix lift_word(const AlgebraSpec& spec,
                       const std::vector<std::string>& names) {
  const BasisGrading basis2 = BasisGrading::kron(spec.basis, spec.basis);
  GradedMatrix acc =
      GradedMatrix::identity(basis2.dim(), spec.form.arity());
  for (const std::string& name : names) {
    size_t idx = spec.gen_names.size();
    for (size_t k = 0; k < spec.gen_names.size(); ++k)
      if (spec.gen_names[k] == name) idx = k;
    const bool primitive =
        idx < spec.gen_names.size() &&
        std::find(spec.primitive.begin(), spec.primitive.end(), idx) !=
            spec.primitive.end();
    ensure(primitive, ErrorKind::NotPrimitive,
           "'" + name + "' is not a primitive generator of " + spec.label);
    acc = mat_multiply(
        acc, lift_primitive(spec.gens[idx], spec.form, spec.basis), basis2);
  }
  return acc;
}

namespace {

std::optional<Poly> poly_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return Poly();
  if (num.degree() < den.degree()) return std::nullopt;
  Poly rem = num;
  std::vector<Rational> q(
      static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
  const Rational lead = den.coeff(den.degree());
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const int shift = rem.degree() - den.degree();
    const Rational c = rem.coeff(rem.degree()) / lead;
    q[static_cast<size_t>(shift)] = c;
    std::vector<Rational> t(static_cast<size_t>(shift) + 1, Rational(0));
    t.back() = c;
    rem -= Poly::from_coeffs(std::move(t)) * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return Poly::from_coeffs(std::move(q));
}

}  // namespace

Poly pauli_coefficient(const GradedMatrix& g, const BilinearForm& form,
                       const BasisGrading& basis1) {
  ensure(mat_multiply(g, g, basis1).is_zero(), ErrorKind::NotNilpotent,
         "operator square must vanish");
  ensure(!g.is_zero(), ErrorKind::ZeroVector, "zero operator has no factor");
  const BasisGrading basis2 = BasisGrading::kron(basis1, basis1);
  const GradedMatrix lifted = lift_primitive(g, form, basis1);
  const GradedMatrix sq = mat_multiply(lifted, lifted, basis2);
  const GradedMatrix doubled = graded_kron(g, g, form, basis1, basis1);
  size_t pivot = doubled.a.size();
  for (size_t k = 0; k < doubled.a.size(); ++k)
    if (!doubled.a[k].is_zero()) {
      pivot = k;
      break;
    }
  ensure(pivot < doubled.a.size(), ErrorKind::Internal,
         "doubled operator of a nonzero operator cannot vanish");
  const auto factor = poly_div(sq.a[pivot], doubled.a[pivot]);
  ensure(factor.has_value(), ErrorKind::Internal,
         "lifted square is not proportional to the doubled operator");
  ensure(sq == mat_scale(*factor, doubled), ErrorKind::Internal,
         "lifted square is not proportional to the doubled operator");
  return *factor;
}

bool coassociativity_check(const AlgebraSpec& spec) {
  const BasisGrading& b1 = spec.basis;
  const BasisGrading b2 = BasisGrading::kron(b1, b1);
  const uint32_t arity = spec.form.arity();
  const GradedMatrix one1 = GradedMatrix::identity(b1.dim(), arity);
  const GradedMatrix one2 = GradedMatrix::identity(b2.dim(), arity);
  for (size_t idx : spec.primitive) {
    const GradedMatrix& g = spec.gens[idx];
    const GradedMatrix lifted = lift_primitive(g, spec.form, b1);
    const GradedMatrix left =
        mat_add(graded_kron(lifted, one1, spec.form, b2, b1),
                graded_kron(one2, g, spec.form, b2, b1));
    const GradedMatrix right =
        mat_add(graded_kron(g, one2, spec.form, b1, b2),
                graded_kron(one1, lifted, spec.form, b1, b2));
    if (left != right) return false;
  }
  return true;
}

StateRay StateRay::canonical(const std::vector<Rational>& raw) {
  ensure(!raw.empty(), ErrorKind::ZeroVector, "empty vector");
  Int scale(1);
  for (const Rational& q : raw)
    scale = boost::multiprecision::lcm(scale,
                                       boost::multiprecision::denominator(q));
  std::vector<Int> v;
  v.reserve(raw.size());
  for (const Rational& q : raw)
    v.push_back(boost::multiprecision::numerator(q) *
                (scale / boost::multiprecision::denominator(q)));
  Int g(0);
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  ensure(g != 0, ErrorKind::ZeroVector, "zero vector has no ray");
  Int lead(0);
  for (const Int& x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  if (lead < 0) g = -g;
  for (Int& x : v) x /= g;
  StateRay ray;
  ray.v = std::move(v);
  return ray;
}

std::vector<size_t> StateRay::support() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.push_back(k);
  return out;
}

std::string StateRay::str() const {
  std::ostringstream out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out << ' ';
    out << v[k];
  }
  return out.str();
}

size_t HilbertSpace2::dim() const {
  size_t n = 0;
  for (const EnergyLevel& lvl : levels) n += lvl.rays.size();
  return n;
}

const EnergyLevel* HilbertSpace2::find_level(const Poly& energy) const {
  for (const EnergyLevel& lvl : levels)
    if (lvl.energy == energy) return &lvl;
  return nullptr;
}

std::vector<Rational> vacuum2() {
  std::vector<Rational> v(16, Rational(0));
  v[0] = 1;
  return v;
}

std::vector<Poly> apply_poly(const GradedMatrix& m,
                             const std::vector<Rational>& v) {
  ensure(m.dim == v.size(), ErrorKind::DimensionMismatch,
         "matrix and vector sizes differ");
  std::vector<Poly> out(m.dim, Poly());
  for (size_t i = 0; i < m.dim; ++i)
    for (size_t j = 0; j < m.dim; ++j) {
      if (m.at(i, j).is_zero() || v[j] == 0) continue;
      out[i] += m.at(i, j) * Poly(v[j]);
    }
  return out;
}

std::vector<Rational> apply_const(const GradedMatrix& m,
                                  const std::vector<Rational>& v) {
  ensure(m.dim == v.size(), ErrorKind::DimensionMismatch,
         "matrix and vector sizes differ");
  std::vector<Rational> out(m.dim, Rational(0));
  for (size_t i = 0; i < m.dim; ++i)
    for (size_t j = 0; j < m.dim; ++j) {
      const Poly& e = m.at(i, j);
      if (e.is_zero() || v[j] == 0) continue;
      ensure(e.is_constant(), ErrorKind::Internal,
             "matrix has coupling-dependent entries");
      out[i] += e.coeff(0) * v[j];
    }
  return out;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc(0);
  for (size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

struct LevelBuild {
  Poly energy;
  std::vector<std::vector<Rational>> ortho;  // arrival order
};

// Orthogonal reduction against the level basis; returns the residue if it
// opens a new direction.
std::optional<std::vector<Rational>> reduce_into(
    LevelBuild& level, const std::vector<Rational>& vec) {
  std::vector<Rational> w = vec;
  for (const std::vector<Rational>& b : level.ortho) {
    const Rational num = dot(w, b);
    if (num == 0) continue;
    const Rational f = num / dot(b, b);
    for (size_t k = 0; k < w.size(); ++k) w[k] -= f * b[k];
  }
  for (const Rational& q : w)
    if (q != 0) return w;
  return std::nullopt;
}

}  // namespace

HilbertSpace2 hilbert_space(const AlgebraSpec& spec) {
  const BasisGrading basis2 = BasisGrading::kron(spec.basis, spec.basis);
  const GradedMatrix h2 = lift_primitive(
      spec.gens[spec.gen_index("H")], spec.form, spec.basis);
  std::vector<size_t> alphabet;
  std::vector<GradedMatrix> lifted;
  for (size_t idx : spec.primitive) {
    if (spec.energy_step[idx].is_zero()) continue;
    alphabet.push_back(idx);
    lifted.push_back(lift_primitive(spec.gens[idx], spec.form, spec.basis));
  }
  std::vector<LevelBuild> levels;
  auto level_of = [&](const Poly& energy) -> LevelBuild& {
    for (LevelBuild& lvl : levels)
      if (lvl.energy == energy) return lvl;
    levels.push_back(LevelBuild{energy, {}});
    return levels.back();
  };
  auto assert_eigen = [&](const std::vector<Rational>& vec, const Poly& e) {
    const std::vector<Poly> hv = apply_poly(h2, vec);
    for (size_t k = 0; k < vec.size(); ++k)
      ensure(hv[k] == e * Poly(vec[k]), ErrorKind::Internal,
             "word vector is not an energy eigenvector");
  };

  struct Item {
    std::vector<Rational> v;
    Poly energy;
  };
  std::vector<Item> frontier = {{vacuum2(), Poly()}};
  level_of(Poly()).ortho.push_back(frontier.front().v);
  // Every reached vector is homogeneous in energy, so generators of zero
  // step act as scalars on it and are left out of the word alphabet.
  // Dimensions saturate at word length 4; length 5 is scanned to prove it.
  for (int len = 1; len <= 5; ++len) {
    std::vector<Item> next;
    for (const Item& item : frontier)
      for (size_t k = 0; k < alphabet.size(); ++k) {
        std::vector<Rational> w = apply_const(lifted[k], item.v);
        bool zero = true;
        for (const Rational& q : w)
          if (q != 0) {
            zero = false;
            break;
          }
        if (zero) continue;
        const Poly energy = item.energy + spec.energy_step[alphabet[k]];
        assert_eigen(w, energy);
        auto residue = reduce_into(level_of(energy), w);
        if (!residue) continue;
        ensure(len <= 4, ErrorKind::Internal,
               "word length bound exceeded for " + spec.label);
        level_of(energy).ortho.push_back(*residue);
        next.push_back(Item{std::move(*residue), energy});
      }
    frontier = std::move(next);
  }
  std::sort(levels.begin(), levels.end(),
            [](const LevelBuild& a, const LevelBuild& b) {
              return a.energy < b.energy;
            });
  HilbertSpace2 out;
  out.label = spec.label;
  for (LevelBuild& lvl : levels) {
    EnergyLevel elvl;
    elvl.energy = lvl.energy;
    for (const std::vector<Rational>& b : lvl.ortho)
      elvl.rays.push_back(StateRay::canonical(b));
    out.levels.push_back(std::move(elvl));
  }
  return out;
}

const HilbertSpace2& hilbert_space_cached(const std::string& label) {
  static std::map<std::string, HilbertSpace2> cache;
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  static const std::map<std::string, std::string> space_alias = {
      {"LA_min", "fLA_min"},
      {"LS_min", "fLS_min"},
      {"CLA_min", "fCLA_min"},
      {"CLS_min", "fCLS_min"}};
  auto alias = space_alias.find(label);
  const std::string resolved = alias == space_alias.end() ? label : alias->second;
  HilbertSpace2 space = hilbert_space(catalog(resolved));
  space.label = label;
  return cache.emplace(label, std::move(space)).first->second;
}

SpectrumFingerprint fingerprint(const HilbertSpace2& space) {
  SpectrumFingerprint fp;
  for (const EnergyLevel& lvl : space.levels)
    fp.emplace_back(lvl.energy, lvl.rays.size());
  return fp;
}

std::string hilbert_str(const HilbertSpace2& space) {
  std::ostringstream out;
  for (const EnergyLevel& lvl : space.levels)
    for (const StateRay& ray : lvl.rays)
      out << "E=" << lvl.energy.str() << " : " << ray.str() << '\n';
  return out.str();
}

HilbertSpace2 parse_hilbert(std::string_view text, const std::string& label) {
  HilbertSpace2 out;
  out.label = label;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t eq = line.find("E=");
    const size_t colon = line.find(" : ");
    ensure(eq == 0 && colon != std::string::npos, ErrorKind::ParseError,
           "bad state line '" + line + "'");
    const Poly energy = Poly::parse(line.substr(2, colon - 2));
    std::istringstream coords(line.substr(colon + 3));
    StateRay ray;
    std::string tok;
    while (coords >> tok) {
      try {
        ray.v.push_back(Int(tok));
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad coordinate '" + tok + "'");
      }
    }
    ensure(!ray.v.empty(), ErrorKind::ParseError, "state line has no entries");
    if (out.levels.empty() || !(out.levels.back().energy == energy)) {
      ensure(out.find_level(energy) == nullptr, ErrorKind::ParseError,
             "level listed twice");
      out.levels.push_back(EnergyLevel{energy, {}});
    }
    out.levels.back().rays.push_back(std::move(ray));
  }
  return out;
}

}  // namespace paracolor
