#pragma once

#include <string>
#include <vector>

namespace mellint {

/// Outcome of one property suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  int checks = 0;
  int failures = 0;
  /// First failing check, or the exception text if the suite threw.
  std::string detail;
  double wall_ms = 0;
};

/// Runs the property suites at digits = 50, or digits = 30 with `quick`.
/// A suite that throws is reported as failed rather than propagated.
[[nodiscard]] std::vector<SuiteResult> run_selftest(bool quick);

}  // namespace mellint
