#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtele {

inline constexpr double kVerifyTolerance = 1e-10;
inline constexpr unsigned kMaxVerifyQubits = 5;
inline constexpr unsigned kMaxExhaustiveQubits = 3;
// Outcomes checked per input when 4^n is too many to enumerate.
inline constexpr std::size_t kSampledBranches = 32;

struct StageDeviation {
  std::string name;
  double max_deviation = 0.0;
};

struct FixtureTally {
  std::string name;
  std::size_t matched = 0;
  std::size_t total = 0;
};

struct VerificationReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t inputs_checked = 0;
  std::vector<StageDeviation> stages;
  std::size_t branches_checked = 0;
  double max_branch_deviation = 0.0;
  std::optional<FixtureTally> fixtures;
  std::vector<std::string> errors;
  bool passed = false;
};

/// Cross-checks the gate-level pipeline against the closed-form oracles.
///
/// Inputs are every basis state (when n <= 3) plus `trials` random states
/// drawn from `seed`. For n <= 3 all 4^n outcomes are checked per input;
/// above that, kSampledBranches outcomes are drawn. Failures are reported,
/// never thrown, except for an n outside 1..5.
VerificationReport verify_protocol(unsigned n, std::size_t trials,
                                   std::uint64_t seed);

}  // namespace qtele
