// One line per acceptance criterion; exits non-zero if any fails.
#include <iostream>

#include "fourcolor/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= fourcolor::kCriteriaCount; ++id) {
    fourcolor::CriterionResult r = fourcolor::run_criterion(id);
    std::cout << fourcolor::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : "acceptance: PASS") << '\n';
  return failed ? 1 : 0;
}
