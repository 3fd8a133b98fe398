// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <cstdio>

#include "ezeta/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= ezeta::kCriterionCount; ++id) {
    const auto r = ezeta::run_criterion(id);
    if (!r.passed) ++failed;
    std::printf("[%s] criterion %2d: %s | measured %.3e, threshold %.1e | %.2f s (limit %.0f s) | %s\n",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured, r.threshold, r.seconds,
                r.time_limit, r.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", ezeta::kCriterionCount - failed, ezeta::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
