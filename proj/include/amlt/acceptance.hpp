#pragma once

// The acceptance criteria as one runnable suite, shared by the acceptance
// test binary and `amlt selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace amlt::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20241015;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Smaller samples for criteria 2, 3 and 9.
  bool quick = false;
  double quad_tol = 1e-25;
  /// Called after each criterion, e.g. to stream the line.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run(const SuiteOptions& options = {});

/// "[PASS] 3 remainder split: ..." style line.
std::string format_line(const CriterionResult& r);

} // namespace amlt::acceptance
