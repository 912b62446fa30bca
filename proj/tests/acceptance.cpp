// Acceptance runner: executes the full verification batch and prints
// one pass/fail line per criterion check. Exits nonzero if anything
// fails.

#include <cstdio>
#include <string>

#include "daggerlab/suite.hpp"

int main() {
  const daggerlab::SuiteReport report =
      daggerlab::run_paper_suite(daggerlab::Tolerance{1e-9});
  int failures = 0;
  for (const auto& law : report.laws) {
    if (!law.pass) ++failures;
    std::printf("[%s] %s (residual %.3g)\n", law.pass ? "PASS" : "FAIL",
                law.law.c_str(), law.residual);
  }
  std::printf("%zu checks, %d failures\n", report.laws.size(), failures);
  return failures == 0 ? 0 : 1;
}
