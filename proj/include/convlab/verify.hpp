#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace convlab {

struct VerifyConfig {
  int atoms = 4;
  std::uint64_t seed = 1;
  /// Random sequences (criteria 6 and 10) and sampled classes at five atoms.
  int samples = 1000;
  /// Extra table checked alongside the built-in submeasures.
  std::optional<std::filesystem::path> submeasure;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 12;

/// Runs criteria 1..12 in order. Exhaustive parts cover every carrier from
/// one atom up to min(atoms, 4); at five atoms a sampled pointwise pass is
/// added. Output depends only on the config. Throws ScaleError or
/// ValidationError for a bad config.
std::vector<CriterionResult> run_verification(
    const VerifyConfig& config,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace convlab
