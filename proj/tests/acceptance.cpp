// Acceptance corpus: nine solver-vs-oracle criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <iostream>

#include "gonflow/selftest.hpp"

int main() {
  auto outcomes = gonflow::run_all_criteria(&std::cout);
  bool all = true;
  for (const auto& c : outcomes) all = all && c.pass;
  if (!all) {
    std::cout << "acceptance: FAIL\n";
    return 1;
  }
  std::cout << "acceptance: PASS (" << outcomes.size() << " criteria)\n";
  return 0;
}
