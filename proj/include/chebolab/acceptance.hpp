#pragma once

// Acceptance criteria as runnable checks, shared by the CLI and the test suite.

#include <string>
#include <vector>

namespace chebo {

struct AcceptanceConfig {
  double density_tolerance = 0.05;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// 0 when the criterion has no time limit.
  double time_limit = 0.0;
  /// Statistical criteria fail as TOLERANCE_FAIL, exact ones as INVARIANT_VIOLATION.
  bool statistical = false;

  std::string verdict() const;
};

inline constexpr int kCriterionCount = 12;

/// Throws INVALID_ARGUMENT for ids outside 1..12.
CriterionResult run_criterion(int id, const AcceptanceConfig& config = {});

/// "PASS [ 3] title (0.41 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace chebo
