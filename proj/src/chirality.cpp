#include "paracolor/chirality.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "paracolor/errors.hpp"

namespace paracolor {

const std::vector<PairInfo>& pair_table() {
  static const std::vector<PairInfo> table = {
      {"fLS_sub-pCLS_sub", "fLS_sub", "pCLS_sub", false},
      {"LS_min-CLS_min", "LS_min", "CLS_min", true},
      {"fCLA_sub-pLA_sub", "pLA_sub", "fCLA_sub", true},
      {"LA_min-CLA_min", "LA_min", "CLA_min", true},
  };
  return table;
}

const PairInfo& pair_info(std::string_view name) {
  for (const PairInfo& p : pair_table())
    if (p.name == name) return p;
  fail(ErrorKind::UnknownPair, "no pair named '" + std::string(name) + "'");
}

RayPair sign_pair(std::string_view pair_name, const Poly& level) {
  const PairInfo& info = pair_info(pair_name);
  const HilbertSpace2& so = hilbert_space_cached(info.ordinary);
  const HilbertSpace2& sc = hilbert_space_cached(info.colored);
  const EnergyLevel* lo = so.find_level(level);
  const EnergyLevel* lc = sc.find_level(level);
  ensure(lo != nullptr && lc != nullptr, ErrorKind::LevelNotFound,
         "level " + level.str() + " is absent from pair " + info.name);
  ensure(lo->rays.size() == 1 && lc->rays.size() == 1,
         ErrorKind::DegenerateLevel,
         "level " + level.str() + " is degenerate in pair " + info.name);
  ensure(!(lo->rays[0] == lc->rays[0]), ErrorKind::NoSignDifference,
         "members agree at level " + level.str());
  return RayPair{level, lo->rays[0], lc->rays[0]};
}

namespace {

Int idot(const StateRay& a, const StateRay& b) {
  Int acc(0);
  for (size_t k = 0; k < a.v.size(); ++k) acc += a.v[k] * b.v[k];
  return acc;
}

Projector rank_one(const StateRay& ray, const std::vector<size_t>& support) {
  Projector p;
  p.support = support;
  const size_t d = support.size();
  Int norm(0);
  for (size_t k = 0; k < ray.v.size(); ++k) norm += ray.v[k] * ray.v[k];
  p.p.assign(d, std::vector<Rational>(d, Rational(0)));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      p.p[a][b] = Rational(ray.v[support[a]] * ray.v[support[b]], norm);
  return p;
}

}  // namespace

Discrimination discriminate(const StateRay& u, const StateRay& v) {
  ensure(u.dim() == v.dim(), ErrorKind::DimensionMismatch,
         "rays live in different spaces");
  ensure(!u.support().empty() && !v.support().empty(), ErrorKind::ZeroVector,
         "rays must be nonzero");
  Discrimination d;
  const Int ip = idot(u, v);
  if (ip == 0) {
    d.verdict = Verdict::Discriminable;
    std::vector<size_t> support = u.support();
    for (size_t k : v.support()) support.push_back(k);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    d.plus = rank_one(u, support);
    d.minus = rank_one(v, support);
    d.overlap_sq = 0;
    d.overlap = Rational(0);
    return d;
  }
  d.verdict = Verdict::Indistinguishable;
  d.overlap_sq = Rational(ip * ip, idot(u, u) * idot(v, v));
  d.overlap = rational_sqrt(d.overlap_sq);
  return d;
}

OracleResult projector_oracle(const StateRay& u, const StateRay& v) {
  ensure(u.dim() == v.dim(), ErrorKind::DimensionMismatch,
         "rays live in different spaces");
  const size_t d = u.dim();
  // One unknown per unordered index pair keeps the symmetry structural.
  const size_t cols = d * (d + 1) / 2;
  auto var = [&](size_t a, size_t b) {
    if (a > b) std::swap(a, b);
    return a * d - a * (a - 1) / 2 + (b - a);
  };
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const StateRay* ray : {&u, &v}) {
    const bool fix = ray == &u;
    for (size_t a = 0; a < d; ++a) {
      std::vector<Rational> row(cols, Rational(0));
      for (size_t b = 0; b < d; ++b) row[var(a, b)] += Rational(ray->v[b]);
      rows.push_back(std::move(row));
      rhs.push_back(fix ? Rational(ray->v[a]) : Rational(0));
    }
  }
  OracleResult result;
  if (!linalg::solve(std::move(rows), std::move(rhs), cols).has_value())
    return result;
  // Feasibility found; hand back the rank-one witness and verify every
  // constraint on it directly, idempotence included.
  Int norm(0);
  for (const Int& x : u.v) norm += x * x;
  std::vector<std::vector<Rational>> w(d, std::vector<Rational>(d));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      w[a][b] = Rational(u.v[a] * u.v[b], norm);
  for (size_t a = 0; a < d; ++a) {
    Rational pu(0), pv(0);
    for (size_t b = 0; b < d; ++b) {
      ensure(w[a][b] == w[b][a], ErrorKind::Internal, "witness not symmetric");
      pu += w[a][b] * Rational(u.v[b]);
      pv += w[a][b] * Rational(v.v[b]);
      Rational sq(0);
      for (size_t c = 0; c < d; ++c) sq += w[a][c] * w[c][b];
      ensure(sq == w[a][b], ErrorKind::Internal, "witness not idempotent");
    }
    ensure(pu == Rational(u.v[a]), ErrorKind::Internal,
           "witness does not fix the first ray");
    ensure(pv == 0, ErrorKind::Internal,
           "witness does not kill the second ray");
  }
  result.exists = true;
  result.witness = std::move(w);
  return result;
}

const std::vector<std::vector<int>>& observable_pattern16() {
  // Mask of the zero-sector positions on the two-particle space, row by
  // row; index sectors repeat in the class pattern 00 10 01 11 10 00 11
  // 01 01 11 00 10 11 01 10 00.
  static const std::vector<std::vector<int>> pattern = {
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
  };
  return pattern;
}

GradedMatrix embed_observable(const Projector& proj) {
  const size_t d = proj.support.size();
  ensure(d > 0, ErrorKind::SupportError, "empty support");
  for (size_t k = 0; k < d; ++k) {
    ensure(proj.support[k] < 16, ErrorKind::SupportError,
           "support index out of range");
    if (k) ensure(proj.support[k - 1] < proj.support[k],
                  ErrorKind::SupportError, "support must be ascending");
  }
  ensure(proj.p.size() == d, ErrorKind::NotProjector,
         "projector block does not match its support");
  for (const auto& row : proj.p)
    ensure(row.size() == d, ErrorKind::NotProjector,
           "projector block is not square");
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      ensure(proj.p[a][b] == proj.p[b][a], ErrorKind::NotProjector,
             "projector block is not symmetric");
      Rational sq(0);
      for (size_t c = 0; c < d; ++c) sq += proj.p[a][c] * proj.p[c][b];
      ensure(sq == proj.p[a][b], ErrorKind::NotProjector,
             "projector block is not idempotent");
    }
  const auto& pattern = observable_pattern16();
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      if (proj.p[a][b] != 0)
        ensure(pattern[proj.support[a]][proj.support[b]] == 1,
               ErrorKind::PatternViolation,
               "entry (" + std::to_string(proj.support[a] + 1) + ", " +
                   std::to_string(proj.support[b] + 1) +
                   ") is outside the zero-sector mask");
  const BasisGrading basis2 =
      BasisGrading::kron(BasisGrading::standard4(), BasisGrading::standard4());
  std::vector<Poly> entries(16 * 16, Poly());
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      entries[proj.support[a] * 16 + proj.support[b]] = Poly(proj.p[a][b]);
  GradedMatrix obs = make_graded(std::move(entries), basis2);
  ensure(obs.grade.is_zero(), ErrorKind::Internal,
         "masked observable must sit in the zero sector");
  return obs;
}

int measure(const StateRay& state, const GradedMatrix& obs) {
  ensure(state.dim() == obs.dim, ErrorKind::DimensionMismatch,
         "state and observable sizes differ");
  std::vector<Rational> sv;
  sv.reserve(state.dim());
  for (const Int& x : state.v) sv.push_back(Rational(x));
  const std::vector<Rational> out = apply_const(obs, sv);
  bool fixed = true, killed = true;
  for (size_t k = 0; k < out.size(); ++k) {
    if (out[k] != sv[k]) fixed = false;
    if (out[k] != 0) killed = false;
  }
  if (fixed) return 1;
  if (killed) return 0;
  fail(ErrorKind::NotEigenstate,
       "state is not sharp for this observable");
}

}  // namespace paracolor
