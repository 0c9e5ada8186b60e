// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdlib>
#include <iostream>

#include "convlab/verify.hpp"

int main(int argc, char** argv) {
  convlab::VerifyConfig config;
  config.atoms = 5;
  config.seed = 1;
  config.samples = 1000;
  if (argc > 1) config.atoms = std::atoi(argv[1]);

  int failed = 0;
  convlab::run_verification(config, [&](const convlab::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::cout << convlab::format_result(r) << std::endl;
  });
  std::cout << (convlab::kCriterionCount - failed) << "/" << convlab::kCriterionCount
            << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
