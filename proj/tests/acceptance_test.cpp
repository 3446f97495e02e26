// Runs the release acceptance checks and prints one line per criterion.
// Exit status is non-zero if any criterion fails.

#include <cstdio>

#include "divinfo/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : divinfo::verify::run_acceptance_suite()) {
    std::printf("[%s] %d. %s -- %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
