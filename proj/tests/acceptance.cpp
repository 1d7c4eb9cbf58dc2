#include <cstdio>
#include <cstdlib>
#include <string>

#include "superkac/checks.hpp"

// Runs the acceptance criteria given as arguments, or all of them, one PASS/FAIL line each.
int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int n = 1; n <= superkac::check_count(); ++n) which.push_back(n);
  int failed = 0;
  for (int n : which) {
    const auto r = superkac::run_check(n);
    std::printf("%s %2d %s (%.1f s): %s\n", r.pass ? "PASS" : "FAIL", r.number, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
