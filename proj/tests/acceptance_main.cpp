// One line per acceptance criterion; exit status 0 iff all of them pass.

#include "seifert/selftest.hpp"

#include <algorithm>
#include <iostream>

int main(int argc, char **argv) {
  seifert::AcceptanceOptions options;
  if (argc > 1)
    options.artifact_dir = argv[1];
  auto results = seifert::run_acceptance(options);
  for (auto const &r : results)
    std::cout << seifert::format_check(r) << "\n";
  auto passed = std::count_if(results.begin(), results.end(), [](auto const &r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}
