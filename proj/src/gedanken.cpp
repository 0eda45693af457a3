#include "paracolor/gedanken.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

uint32_t lcg_next(uint32_t state) {
  return 1664525u * state + 1013904223u;
}

Poly parse_level(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  // Accept the spelled-out coupling and the implicit product "2l".
  size_t pos;
  while ((pos = s.find("lambda")) != std::string::npos)
    s.replace(pos, 6, "l");
  std::string expanded;
  for (size_t k = 0; k < s.size(); ++k) {
    expanded.push_back(s[k]);
    if (std::isdigit(static_cast<unsigned char>(s[k])) && k + 1 < s.size() &&
        s[k + 1] == 'l')
      expanded.push_back('*');
  }
  return Poly::parse(expanded);
}

std::string identify_pair(const SpectrumFingerprint& fp) {
  const Poly l = Poly::lambda();
  auto mult = [&](const Poly& e) -> size_t {
    for (const auto& [energy, count] : fp)
      if (energy == e) return count;
    return 0;
  };
  if (mult(Poly(2)) > 0)
    return mult(l + Poly(1)) == 1 ? "fCLA_sub-pLA_sub" : "LA_min-CLA_min";
  return mult(l + Poly(2)) > 0 ? "LS_min-CLS_min" : "fLS_sub-pCLS_sub";
}

bool BlindReport::operator==(const BlindReport& o) const {
  return pair == o.pair && seed == o.seed && trials == o.trials &&
         level == o.level && lambda0 == o.lambda0 &&
         out_of_regime == o.out_of_regime && hidden == o.hidden &&
         fingerprint == o.fingerprint &&
         identified_pair == o.identified_pair &&
         calibration_outcome == o.calibration_outcome &&
         trial_outcomes == o.trial_outcomes && verdict == o.verdict &&
         correct == o.correct;
}

BlindReport run_blind_test(const TrialConfig& config) {
  const PairInfo& info = pair_info(config.pair);
  ensure(config.trials >= 1 && config.trials <= 100000,
         ErrorKind::TrialsOutOfRange, "trials must be in 1..100000");
  BlindReport report;
  report.pair = info.name;
  report.seed = config.seed;
  report.trials = config.trials;
  report.level = config.level;
  report.lambda0 = config.lambda0;

  const HilbertSpace2& ord = hilbert_space_cached(info.ordinary);
  const HilbertSpace2& col = hilbert_space_cached(info.colored);
  if (config.lambda0) {
    // Identification reads which levels are present, so the coupling has
    // to keep every level of the richest spectrum in the catalog apart.
    std::vector<Poly> energies;
    for (const EnergyLevel& lvl : hilbert_space_cached("LA_min").levels)
      energies.push_back(lvl.energy);
    const std::set<Rational> bad = collision_set(energies);
    ensure(bad.find(*config.lambda0) == bad.end(),
           ErrorKind::CollisionAtLambda,
           "coupling " + rational_str(*config.lambda0) +
               " collapses distinct levels of pair " + info.name);
    report.out_of_regime = *config.lambda0 <= 1;
  }

  const uint32_t pick = lcg_next(config.seed);
  const bool hidden_ordinary = ((pick >> 16) & 1u) == 0;
  report.hidden = hidden_ordinary ? info.ordinary : info.colored;
  const HilbertSpace2& hidden_space = hidden_ordinary ? ord : col;
  for (const auto& [energy, count] : fingerprint(hidden_space))
    report.fingerprint.emplace_back(energy.str(), count);
  report.identified_pair = identify_pair(fingerprint(hidden_space));
  ensure(report.identified_pair == info.name, ErrorKind::Internal,
         "fingerprint resolved to a different pair");

  if (!info.discriminable) {
    report.verdict = "Inconclusive";
    report.correct = true;
    return report;
  }

  const Poly level = parse_level(config.level);
  const RayPair rays = sign_pair(info.name, level);
  const Discrimination disc = discriminate(rays.ordinary, rays.colored);
  if (disc.verdict != Verdict::Discriminable) {
    // The members' rays overlap at this level, so no projection
    // measurement settles the question there.
    report.verdict = "Inconclusive";
    report.correct = true;
    return report;
  }
  const GradedMatrix obs = embed_observable(*disc.plus);
  report.calibration_outcome = measure(rays.ordinary, obs);
  ensure(report.calibration_outcome == 1, ErrorKind::Internal,
         "calibration must read 1 on the plain-statistics member");

  const EnergyLevel* lvl = hidden_space.find_level(level);
  ensure(lvl != nullptr && lvl->rays.size() == 1, ErrorKind::Internal,
         "hidden member lost the measurement level");
  for (uint32_t t = 0; t < config.trials; ++t)
    report.trial_outcomes.push_back(measure(lvl->rays[0], obs));
  const bool all_one = std::all_of(report.trial_outcomes.begin(),
                                   report.trial_outcomes.end(),
                                   [](int o) { return o == 1; });
  const bool all_zero = std::all_of(report.trial_outcomes.begin(),
                                    report.trial_outcomes.end(),
                                    [](int o) { return o == 0; });
  ensure(all_one || all_zero, ErrorKind::Internal,
         "sharp measurement produced mixed outcomes");
  report.verdict = all_one ? "Ordinary" : "Colored";
  report.correct = (report.verdict == "Ordinary") == hidden_ordinary;
  return report;
}

std::string report_text(const BlindReport& report) {
  std::ostringstream out;
  out << "blind test report\n";
  out << "pair: " << report.pair << '\n';
  out << "seed: " << report.seed << '\n';
  out << "trials: " << report.trials << '\n';
  out << "level: " << report.level << '\n';
  out << "lambda: "
      << (report.lambda0 ? rational_str(*report.lambda0) : "symbolic");
  if (report.out_of_regime) out << " (out of regime)";
  out << '\n';
  out << "hidden: " << report.hidden << '\n';
  out << "spectrum:";
  for (const auto& [energy, count] : report.fingerprint)
    out << ' ' << energy << " x" << count;
  out << '\n';
  out << "identified pair: " << report.identified_pair << '\n';
  out << "calibration outcome: ";
  if (report.calibration_outcome)
    out << *report.calibration_outcome;
  else
    out << "n/a";
  out << '\n';
  out << "trial outcomes:";
  if (report.trial_outcomes.empty()) {
    out << " none";
  } else {
    for (int o : report.trial_outcomes) out << ' ' << o;
  }
  out << '\n';
  out << "verdict: " << report.verdict << '\n';
  out << "correct: " << (report.correct ? "yes" : "no") << '\n';
  return out.str();
}

std::string report_json(const BlindReport& report) {
  nlohmann::ordered_json j;
  j["pair"] = report.pair;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["level"] = report.level;
  if (report.lambda0)
    j["lambda"] = rational_str(*report.lambda0);
  else
    j["lambda"] = nullptr;
  j["out_of_regime"] = report.out_of_regime;
  j["hidden"] = report.hidden;
  j["fingerprint"] = nlohmann::ordered_json::array();
  for (const auto& [energy, count] : report.fingerprint)
    j["fingerprint"].push_back({{"energy", energy}, {"multiplicity", count}});
  j["identified_pair"] = report.identified_pair;
  if (report.calibration_outcome)
    j["calibration_outcome"] = *report.calibration_outcome;
  else
    j["calibration_outcome"] = nullptr;
  j["trial_outcomes"] = report.trial_outcomes;
  j["verdict"] = report.verdict;
  j["correct"] = report.correct;
  return j.dump(2) + "\n";
}

BlindReport parse_report_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad report json: ") + e.what());
  }
  BlindReport r;
  try {
    r.pair = j.at("pair").get<std::string>();
    r.seed = j.at("seed").get<uint32_t>();
    r.trials = j.at("trials").get<uint32_t>();
    r.level = j.at("level").get<std::string>();
    if (!j.at("lambda").is_null())
      r.lambda0 = parse_rational(j.at("lambda").get<std::string>());
    r.out_of_regime = j.at("out_of_regime").get<bool>();
    r.hidden = j.at("hidden").get<std::string>();
    for (const auto& item : j.at("fingerprint"))
      r.fingerprint.emplace_back(item.at("energy").get<std::string>(),
                                 item.at("multiplicity").get<size_t>());
    r.identified_pair = j.at("identified_pair").get<std::string>();
    if (!j.at("calibration_outcome").is_null())
      r.calibration_outcome = j.at("calibration_outcome").get<int>();
    r.trial_outcomes = j.at("trial_outcomes").get<std::vector<int>>();
    r.verdict = j.at("verdict").get<std::string>();
    r.correct = j.at("correct").get<bool>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad report json: ") + e.what());
  }
  return r;
}

}  // namespace paracolor
