#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paracolor/chirality.hpp"

namespace paracolor {

struct TrialConfig {
  std::string pair;
  uint32_t seed = 0;
  uint32_t trials = 1;
  std::optional<Rational> lambda0;  // defaults to symbolic coupling
  std::string level = "l+2";        // "l+2", "2l+1", or "l+1"
};

// Which pair a spectrum fingerprint belongs to.
std::string identify_pair(const SpectrumFingerprint& fp);

struct BlindReport {
  std::string pair;
  uint32_t seed = 0;
  uint32_t trials = 1;
  std::string level;
  std::optional<Rational> lambda0;
  bool out_of_regime = false;
  std::string hidden;
  std::vector<std::pair<std::string, size_t>> fingerprint;
  std::string identified_pair;
  std::optional<int> calibration_outcome;
  std::vector<int> trial_outcomes;
  std::string verdict;  // "Ordinary", "Colored", "Inconclusive"
  bool correct = false;

  bool operator==(const BlindReport& o) const;
};

// One blind run: a seeded pick hides one pair member, the spectrum is
// fingerprinted, the discriminating level is measured against the
// projector calibrated to read 1 on the ordinary member, and the verdict
// is compared with the hidden pick.
BlindReport run_blind_test(const TrialConfig& config);

std::string report_text(const BlindReport& report);
std::string report_json(const BlindReport& report);
BlindReport parse_report_json(const std::string& text);

// Mixed congruential step x -> 1664525 x + 1013904223 mod 2^32; the
// hidden pick is bit 16 of the first step.
uint32_t lcg_next(uint32_t state);

Poly parse_level(std::string_view text);

}  // namespace paracolor
