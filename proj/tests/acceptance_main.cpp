// Runs the ten acceptance criteria with the default seed and prints one
// line per criterion. Exits nonzero when any criterion fails.

#include <cstdio>

#include "symplecto/verify/acceptance.hpp"

int main() {
  symplecto::verify::AcceptanceOptions options;
  options.on_result = [](const symplecto::verify::CriterionResult& r) {
    std::printf("%s\n", symplecto::verify::format_result(r).c_str());
    std::fflush(stdout);
  };
  const auto results = symplecto::verify::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
