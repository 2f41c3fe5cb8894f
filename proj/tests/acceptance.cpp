// Acceptance gate: run every certification and print one line per criterion.
// Budgets are pinned inside certify.hpp; a criterion passes only when its
// checks hold and it finishes inside its budget.

#include <cstdio>

#include "dayconv/certify.hpp"

int main() {
  dayconv::certify::CertifyOptions opt;
#ifdef DAYCONV_TESTS_DIR
  opt.golden_dir = std::string(DAYCONV_TESTS_DIR) + "/golden";
#endif
  auto results = dayconv::certify::run_certifications(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-26s %7.2fs (budget %.0fs)\n", r.passed() ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.budget_seconds);
    if (!r.passed()) {
      ++failed;
      if (!r.ok) std::printf("       %s\n", r.detail.c_str());
      if (!r.within_budget()) std::printf("       over budget\n");
    }
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
