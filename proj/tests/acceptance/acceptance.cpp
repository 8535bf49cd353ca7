// Runs the acceptance criteria given on the command line (all when none).

#include <cstdio>
#include <cstdlib>
#include <string>

#include "chebolab/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= chebo::kCriterionCount; ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    const auto r = chebo::run_criterion(id);
    std::printf("%s\n", chebo::format_result(r).c_str());
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
