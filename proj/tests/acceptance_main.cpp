#include <cstdio>
#include <iostream>

#include "chernflop/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& spec : chernflop::acceptance_criteria()) {
    const auto r = chernflop::run_criterion(spec);
    std::printf("[%s] criterion %2d: %s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
