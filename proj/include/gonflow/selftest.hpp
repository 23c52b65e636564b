#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonflow {

// Acceptance suite: nine self-contained criterion runners cross-checking the
// solvers against independent brute-force oracles on exhaustive and
// fixed-seed random corpora.  Each runner is deterministic; `detail` reports
// corpus sizes and observed extremes, or the first failure.

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// id in 1..9; throws input_error otherwise.
CriterionOutcome run_criterion(int id);

// Runs all nine in order; when log is non-null each outcome is printed as
// "criterion N (<name>): PASS|FAIL — <detail>" as soon as it finishes.
std::vector<CriterionOutcome> run_all_criteria(std::ostream* log = nullptr);

}  // namespace gonflow
