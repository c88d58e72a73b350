#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dichotomy::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Suite names in report order.
std::vector<std::string> suite_names();

/// Runs the named suites (all when `only` is empty), in name order. Throws
/// std::invalid_argument on an unknown name.
std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::vector<std::string>& only = {});

}  // namespace dichotomy::verify
