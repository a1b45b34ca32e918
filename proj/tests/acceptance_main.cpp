// Runs every acceptance criterion and prints one pass/fail line each;
// exits nonzero if any criterion fails.

#include <cstdio>

#include "ufact/acceptance.hpp"

int main() {
  bool all_ok = true;
  for (const auto& r : ufact::run_acceptance_suite()) {
    all_ok = all_ok && r.passed;
    std::printf("%s  %2d. %s%s%s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.empty() ? "" : " — ", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all_ok ? "all criteria passed" : "some criteria FAILED");
  return all_ok ? 0 : 1;
}
