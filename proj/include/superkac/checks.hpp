#pragma once

#include <string>
#include <vector>

namespace superkac {

struct CheckResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Number of acceptance criteria; run_check accepts 1..check_count().
int check_count();

/// Runs one acceptance criterion. Exceptions are caught and reported as failures.
CheckResult run_check(int number);

}  // namespace superkac
