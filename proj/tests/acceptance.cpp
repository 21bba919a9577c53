// One line per acceptance criterion; exit status 1 if any fails.

#include <iomanip>
#include <iostream>

#include "monohopf/acceptance.hpp"

int main() {
  using namespace monohopf;
  const SweepOptions opts;
  const auto& fns = all_criteria();
  int failed = 0;
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const CriterionResult r = run_timed(static_cast<int>(k) + 1, fns[k], opts);
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << ": " << r.title << " -- "
              << r.detail << " [" << std::fixed << std::setprecision(1) << r.seconds << "s]" << std::endl;
  }
  std::cout << (fns.size() - static_cast<std::size_t>(failed)) << "/" << fns.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
