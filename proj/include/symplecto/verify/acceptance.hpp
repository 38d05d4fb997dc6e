#pragma once

// The cross-validation suite: ten criteria, each comparing two independent
// computations of the same quantity at a fixed tolerance and within a
// wall-clock budget.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symplecto::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // measured worst-case errors and sample counts
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  /// Adds extended checks (q = 2 closed forms, larger sphere tables) to the
  /// criteria that have them. The tolerances never change.
  bool full = false;
  /// Restricts the run to these ids; empty runs all.
  std::vector<int> only;
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One line: "[PASS] 3  title  (1.23 s / 10 s)  detail".
std::string format_result(const CriterionResult& r);

}  // namespace symplecto::verify
