#pragma once

#include <span>
#include <string>
#include <vector>

namespace fourcolor {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long checked = 0;
  /// Counts, or the first failing instance as graph6 plus the reason.
  std::string detail;
  double seconds = 0;
  /// Expected wall time; reported next to the measured time, not enforced.
  double budget_seconds = 0;
};

inline constexpr int kCriteriaCount = 10;

/// Runs acceptance criterion `id` (1..10). Every criterion is exact and
/// deterministic; the instance streams are seeded by index.
CriterionResult run_criterion(int id);

/// "PASS 3 oracle-agreement checked=424576 ... (12.3s, budget 300s)".
std::string format_result(const CriterionResult& r);

}  // namespace fourcolor
