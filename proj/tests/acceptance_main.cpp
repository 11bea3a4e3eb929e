// Acceptance gate: one line per criterion, exit 0 only when all ten pass.
#include <cstdio>

#include "moorekit/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : moorekit::run_acceptance_suite()) {
    std::printf("%s  %2d  %s\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str());
    if (!r.pass) {
      ++failed;
      std::printf("%s\n", r.detail.dump(2).c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
