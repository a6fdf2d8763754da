#include <iostream>
#include <string>

#include "smoothsum_tools/verify.hpp"

int main() {
  using namespace smoothsum::tools;
  int failed = 0;
  run_acceptance(Level::desk, [&](const CriterionResult& r) {
    std::cout << result_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " + std::to_string(failed))
            << std::endl;
  return failed == 0 ? 0 : 1;
}
