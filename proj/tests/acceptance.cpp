// Acceptance gate: runs every criterion with its pinned tolerance and prints
// one PASS/FAIL line each. Exit status is nonzero if any criterion fails.

#include <iostream>

#include "deltamat/acceptance.hpp"

int main() {
  deltamat::acceptance::Options options;
  options.workers = 4;
  int failed = 0;
  deltamat::acceptance::run_all(options, [&](const deltamat::acceptance::Result& r) {
    std::cout << deltamat::acceptance::format_line(r) << '\n' << std::flush;
    failed += !r.passed;
  });
  std::cout << (failed == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: " + std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
