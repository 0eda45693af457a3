// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on
// any failure. Each criterion re-derives its expectations instead of
// trusting the library's own assertions.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "paracolor/gedanken.hpp"
#include "test_util.hpp"

using namespace paracolor;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void criterion_forms() {
  for (const std::string name : {"LA", "LS", "CLA", "CLS"}) {
    const BilinearForm form = BilinearForm::preset(name);
    const StatisticsClass cls = form.classify();
    const bool super = name == "LS" || name == "CLS";
    expect(cls == (super ? StatisticsClass::ColorLieSuperalgebra
                         : StatisticsClass::ColorLieAlgebra),
           "classification of preset " + name);
    // Rebuilding from the raw table must pass the validator.
    expect(BilinearForm::deserialize(form.serialize()) == form,
           "preset " + name + " does not survive revalidation");
  }
}

void criterion_oscillators() {
  const BasisGrading basis = BasisGrading::standard4();
  auto anti = [&](const GradedMatrix& x, const GradedMatrix& y) {
    return mat_add(mat_multiply(x, y, basis), mat_multiply(y, x, basis));
  };
  auto comm = [&](const GradedMatrix& x, const GradedMatrix& y) {
    return mat_sub(mat_multiply(x, y, basis), mat_multiply(y, x, basis));
  };
  for (OscKind kind : {OscKind::Fermionic, OscKind::Parafermionic}) {
    const OscillatorSet s = build_oscillators(kind);
    const std::string who = osc_kind_name(kind);
    for (const GradedMatrix* z : {&s.ann1, &s.cre1, &s.ann2, &s.cre2})
      expect(anti(*z, *z).is_zero(), who + " ladder square");
    expect(anti(s.ann1, s.cre1) == s.central, who + " first pair relation");
    expect(anti(s.ann2, s.cre2) == s.central, who + " second pair relation");
    for (const auto& [x, y] :
         {std::pair{&s.ann1, &s.ann2}, std::pair{&s.ann1, &s.cre2},
          std::pair{&s.cre1, &s.ann2}, std::pair{&s.cre1, &s.cre2}}) {
      const GradedMatrix own = kind == OscKind::Fermionic ? anti(*x, *y)
                                                          : comm(*x, *y);
      expect(own.is_zero(), who + " cross relation");
    }
    for (const GradedMatrix* z : {&s.ann1, &s.cre1, &s.ann2, &s.cre2})
      expect(comm(s.central, *z).is_zero(), who + " centrality");
  }
  // The sets differ only in the third line: swapping the cross bracket
  // symbol breaks each kind.
  const OscillatorSet f = build_oscillators(OscKind::Fermionic);
  const OscillatorSet p = build_oscillators(OscKind::Parafermionic);
  expect(!comm(f.cre1, f.cre2).is_zero(), "fermionic cross commutator");
  expect(!anti(p.cre1, p.cre2).is_zero(), "parafermionic cross anticommutator");
  expect(f.ann1 == p.ann1 && f.cre1 == p.cre1,
         "first ladder pair must not depend on the kind");
}

void criterion_catalog() {
  expect(catalog_labels().size() == 12, "catalog size");
  for (const std::string& label : catalog_labels()) {
    const ClosureReport report = closure_check(catalog(label));
    expect(report.closed, label + ": " + report.detail);
    expect(report.relations_ok, label + ": " + report.detail);
    expect(report.jacobi_ok, label + ": " + report.detail);
  }
  // Spot identities quoted with the catalog.
  const AlgebraSpec& fla = catalog("fLA_min");
  const GradedMatrix fbr =
      graded_bracket(fla.gens[1], fla.gens[2], fla.form, fla.basis);
  expect(fbr == mat_scale(Poly(2), fla.gens[3]),
         "fLA_min raise pair bracket is not twice the top raise");
  const AlgebraSpec& pcla = catalog("pCLA_min");
  const GradedMatrix pbr =
      graded_bracket(pcla.gens[1], pcla.gens[2], pcla.form, pcla.basis);
  expect(pbr == mat_scale(Poly(2), pcla.gens[3]),
         "pCLA_min raise pair bracket is not twice the top raise");
  expect(pcla.form.value(pcla.gens[1].grade, pcla.gens[2].grade) == 1,
         "pCLA_min raise pair bracket must be an anticommutator");
  expect(fla.form.value(fla.gens[1].grade, fla.gens[2].grade) == 0,
         "fLA_min raise pair bracket must be a commutator");
}

void criterion_pauli() {
  const BasisGrading basis = BasisGrading::standard4();
  const OscillatorSet osc = build_oscillators(OscKind::Fermionic);
  for (const std::string name : {"LS", "CLS"}) {
    expect(pauli_coefficient(osc.cre2, BilinearForm::preset(name), basis)
               .is_zero(),
           "square factor under " + name);
    expect(pauli_coefficient(osc.cre1, BilinearForm::preset(name), basis)
               .is_zero(),
           "square factor under " + name);
  }
  for (const std::string name : {"LA", "CLA"}) {
    expect(pauli_coefficient(osc.cre2, BilinearForm::preset(name), basis) ==
               Poly(2),
           "square factor under " + name);
    expect(pauli_coefficient(osc.cre1, BilinearForm::preset(name), basis) ==
               Poly(2),
           "square factor under " + name);
  }
}

void criterion_dimensions() {
  const std::vector<std::pair<std::string, size_t>> dims = {
      {"fLS_sub", 4}, {"pCLS_sub", 4}, {"LS_min", 8},  {"CLS_min", 8},
      {"fCLA_sub", 9}, {"pLA_sub", 9}, {"LA_min", 10}, {"CLA_min", 10}};
  for (const auto& [label, dim] : dims)
    expect(hilbert_space_cached(label).dim() == dim,
           label + " dimension is not " + std::to_string(dim));
  for (const std::string base : {"LA", "LS", "CLA", "CLS"}) {
    const HilbertSpace2 f = hilbert_space(catalog("f" + base + "_min"));
    const HilbertSpace2 p = hilbert_space(catalog("p" + base + "_min"));
    expect(f.levels.size() == p.levels.size(), base + " level counts differ");
    for (size_t k = 0; k < f.levels.size(); ++k) {
      expect(f.levels[k].energy == p.levels[k].energy,
             base + " level energies differ");
      expect(f.levels[k].rays == p.levels[k].rays,
             base + " rays differ between oscillator kinds");
    }
  }
}

void criterion_tables() {
  for (const std::string label : {"fLS_sub", "pCLS_sub", "LS_min", "CLS_min",
                                  "fCLA_sub", "pLA_sub", "LA_min",
                                  "CLA_min"}) {
    const std::string golden =
        testutil::read_file(testutil::golden_path("hilbert_" + label + ".txt"));
    expect(hilbert_str(hilbert_space_cached(label)) == golden,
           label + " state table deviates from the stored table");
  }
  auto ray = [](const std::string& label, const Poly& level,
                size_t which = 0) {
    const EnergyLevel* lvl = hilbert_space_cached(label).find_level(level);
    expect(lvl != nullptr && which < lvl->rays.size(),
           label + " is missing a level");
    return lvl->rays[which];
  };
  auto entries = [](std::vector<std::pair<size_t, long>> at) {
    StateRay r;
    r.v.assign(16, Int(0));
    for (const auto& [k, v] : at) r.v[k] = v;
    return r;
  };
  const Poly l = Poly::lambda();
  expect(ray("fLS_sub", l + Poly(1)) ==
             entries({{3, 1}, {6, -1}, {9, 1}, {12, 1}}),
         "fLS_sub top state signs");
  expect(ray("pCLS_sub", l + Poly(1)) ==
             entries({{3, 1}, {6, 1}, {9, 1}, {12, 1}}),
         "pCLS_sub top state signs");
  expect(ray("CLS_min", l + Poly(2)) == entries({{11, 1}, {14, -1}}),
         "CLS_min upper doublet sign");
  expect(ray("CLS_min", Poly(2) * l + Poly(1)) == entries({{7, 1}, {13, -1}}),
         "CLS_min lower doublet sign");
  expect(ray("fCLA_sub", l + Poly(2)) == entries({{11, 1}, {14, -1}}),
         "fCLA_sub upper doublet sign");
  expect(ray("LS_min", l + Poly(2)) == entries({{11, 1}, {14, 1}}),
         "LS_min upper doublet sign");
  expect(ray("LA_min", l + Poly(1), 1) == entries({{6, 1}, {9, 1}}),
         "LA_min degenerate split sign");
  expect(ray("CLA_min", l + Poly(1), 1) == entries({{6, 1}, {9, -1}}),
         "CLA_min degenerate split sign");
}

void criterion_degeneracy() {
  const Poly level = Poly::lambda() + Poly(1);
  for (const std::string& label : catalog_labels()) {
    const bool minimal = label.find("_min") != std::string::npos;
    const EnergyLevel* lvl =
        hilbert_space_cached(label).find_level(level);
    expect(lvl != nullptr, label + " has no level at the coupling step plus one");
    expect(lvl->rays.size() == (minimal ? 2 : 1),
           label + " multiplicity is " + std::to_string(lvl->rays.size()));
  }
}

void criterion_discrimination() {
  const Poly l = Poly::lambda();
  const RayPair quads = sign_pair("fLS_sub-pCLS_sub", l + Poly(1));
  const Discrimination dq = discriminate(quads.ordinary, quads.colored);
  expect(dq.verdict == Verdict::Indistinguishable,
         "four-component rays must overlap");
  expect(dq.overlap.has_value() && *dq.overlap == Rational(1, 2),
         "four-component overlap is not one half");
  expect(!projector_oracle(quads.ordinary, quads.colored).exists,
         "solver found a separating projector for overlapping rays");

  const Rational h(1, 2);
  const std::vector<std::vector<Rational>> plus = {{h, h}, {h, h}};
  const std::vector<std::vector<Rational>> minus = {{h, -h}, {-h, h}};
  for (const std::string pair :
       {"LS_min-CLS_min", "LA_min-CLA_min", "fCLA_sub-pLA_sub"}) {
    for (const Poly& level : {l + Poly(2), Poly(2) * l + Poly(1)}) {
      const RayPair rays = sign_pair(pair, level);
      const Discrimination d = discriminate(rays.ordinary, rays.colored);
      expect(d.verdict == Verdict::Discriminable,
             pair + " rays must be orthogonal at " + level.str());
      expect(d.plus.has_value() && d.plus->p == plus,
             pair + " plus projector at " + level.str());
      expect(d.minus.has_value() && d.minus->p == minus,
             pair + " minus projector at " + level.str());
      expect(d.plus->support.size() == 2, pair + " support size");
      const OracleResult oracle =
          projector_oracle(rays.ordinary, rays.colored);
      expect(oracle.exists, pair + " solver disagrees at " + level.str());
    }
  }
}

void criterion_observable_pattern() {
  const BasisGrading b2 =
      BasisGrading::kron(BasisGrading::standard4(), BasisGrading::standard4());
  const auto& pattern = observable_pattern16();
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j)
      expect(pattern[i][j] == (b2.grades[i] == b2.grades[j] ? 1 : 0),
             "mask disagrees with the sector layout");
  const Poly l = Poly::lambda();
  for (const std::string pair :
       {"LS_min-CLS_min", "LA_min-CLA_min", "fCLA_sub-pLA_sub"}) {
    for (const Poly& level : {l + Poly(2), Poly(2) * l + Poly(1)}) {
      const RayPair rays = sign_pair(pair, level);
      const Discrimination d = discriminate(rays.ordinary, rays.colored);
      for (const Projector* proj : {&*d.plus, &*d.minus}) {
        const GradedMatrix obs = embed_observable(*proj);
        for (size_t i = 0; i < 16; ++i)
          for (size_t j = 0; j < 16; ++j)
            if (!obs.at(i, j).is_zero())
              expect(pattern[i][j] == 1,
                     "embedded observable leaves the mask");
      }
    }
  }
  Projector misplaced;
  misplaced.support = {0, 1};
  misplaced.p = {{Rational(1, 2), Rational(1, 2)},
                 {Rational(1, 2), Rational(1, 2)}};
  expect(testutil::thrown_kind([&] { embed_observable(misplaced); }) ==
             ErrorKind::PatternViolation,
         "misplaced entry was accepted");
}

void criterion_braiding() {
  const BasisGrading b1 = BasisGrading::standard4();
  const BasisGrading b2 = BasisGrading::kron(b1, b1);
  std::mt19937 rng(57721566);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<uint32_t> sector(0, 3);
  auto random_homogeneous = [&]() {
    while (true) {
      const GradeWord g{2, sector(rng)};
      std::vector<Poly> e(16, Poly());
      bool nonzero = false;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
          if (b1.grades[i] + b1.grades[j] == g) {
            const int c = coeff(rng);
            if (c != 0) nonzero = true;
            e[i * 4 + j] = Poly(c);
          }
      if (nonzero) return make_graded(std::move(e), b1);
    }
  };
  for (const std::string name : {"LA", "LS", "CLA", "CLS"}) {
    const BilinearForm form = BilinearForm::preset(name);
    for (int rep = 0; rep < 1000; ++rep) {
      const GradedMatrix x = random_homogeneous();
      const GradedMatrix y = random_homogeneous();
      const GradedMatrix u = random_homogeneous();
      const GradedMatrix v = random_homogeneous();
      const GradedMatrix lhs =
          mat_multiply(graded_kron(x, y, form, b1, b1),
                       graded_kron(u, v, form, b1, b1), b2);
      GradedMatrix rhs = graded_kron(mat_multiply(x, u, b1),
                                     mat_multiply(y, v, b1), form, b1, b1);
      if (form.koszul(y.grade, u.grade) < 0) rhs = mat_scale(Poly(-1), rhs);
      expect(lhs == rhs, "product law failed under " + name + " at rep " +
                             std::to_string(rep));
    }
  }
  for (const std::string& label : catalog_labels())
    expect(coassociativity_check(catalog(label)),
           label + " lift is not coassociative");
}

void criterion_blind_test() {
  for (const PairInfo& info : pair_table()) {
    for (uint32_t seed = 0; seed < 100; ++seed) {
      TrialConfig config;
      config.pair = info.name;
      config.seed = seed;
      const BlindReport report = run_blind_test(config);
      if (info.discriminable) {
        expect(report.correct, info.name + " run failed at seed " +
                                   std::to_string(seed));
        expect(report.verdict == "Ordinary" || report.verdict == "Colored",
               info.name + " produced no verdict");
      } else {
        expect(report.verdict == "Inconclusive",
               info.name + " must stay inconclusive");
      }
      if (seed < 5) {
        const BlindReport again = run_blind_test(config);
        expect(report_json(again) == report_json(report),
               info.name + " reports differ for equal seeds");
      }
    }
  }
}

void criterion_collision_guard() {
  std::vector<Poly> energies;
  for (const auto& [energy, mult] :
       fingerprint(hilbert_space_cached("LA_min")))
    energies.push_back(energy);
  expect(energies.size() == 9, "largest spectrum must carry nine levels");
  const std::set<Rational> computed = collision_set(energies);
  // Pairwise solve, done here from scratch as a second route.
  std::set<Rational> solved;
  for (size_t i = 0; i < energies.size(); ++i)
    for (size_t j = i + 1; j < energies.size(); ++j) {
      const Rational da = energies[i].coeff(1) - energies[j].coeff(1);
      const Rational db = energies[i].coeff(0) - energies[j].coeff(0);
      if (da != 0) solved.insert(-db / da);
    }
  expect(computed == solved, "collision set disagrees with pairwise solve");
  const std::set<Rational> frozen = {Rational(-2),   Rational(-1),
                                     Rational(-1, 2), Rational(0),
                                     Rational(1, 2),  Rational(1), Rational(2)};
  expect(computed == frozen, "collision set deviates from the frozen list");
  expect(computed.count(Rational(1)) == 1 && computed.count(Rational(2)) == 1,
         "collision set must contain the integer degeneracies");

  TrialConfig config;
  config.pair = "LS_min-CLS_min";
  config.lambda0 = Rational(2);
  expect(testutil::thrown_kind([&] { run_blind_test(config); }) ==
             ErrorKind::CollisionAtLambda,
         "degenerate coupling 2 was accepted");
  config.lambda0 = Rational(1);
  expect(testutil::thrown_kind([&] { run_blind_test(config); }) ==
             ErrorKind::CollisionAtLambda,
         "degenerate coupling 1 was accepted");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"form validity", criterion_forms},
      {"oscillator relations", criterion_oscillators},
      {"spectrum-generating catalog", criterion_catalog},
      {"exclusion principle", criterion_pauli},
      {"state space dimensions", criterion_dimensions},
      {"eigenvector tables", criterion_tables},
      {"degeneracy pattern", criterion_degeneracy},
      {"discrimination", criterion_discrimination},
      {"observable pattern", criterion_observable_pattern},
      {"braiding and coassociativity", criterion_braiding},
      {"blind test", criterion_blind_test},
      {"collision guard", criterion_collision_guard},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    std::string reason;
    try {
      criteria[k].second();
    } catch (const Failure& f) {
      reason = f.what;
    } catch (const Error& e) {
      reason = std::string("unexpected error: ") + e.what();
    } catch (const std::exception& e) {
      reason = std::string("unexpected exception: ") + e.what();
    }
    if (reason.empty()) {
      std::printf("PASS %2zu %s\n", k + 1, criteria[k].first.c_str());
    } else {
      std::printf("FAIL %2zu %s: %s\n", k + 1, criteria[k].first.c_str(),
                  reason.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
