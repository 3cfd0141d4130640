// Runs the ten acceptance criteria at their stated limits and prints one line
// per criterion.
#include <iostream>

#include "kacmult/verify.hpp"

int main() {
  const kacmult::VerificationReport report = kacmult::run_verification();
  std::cout << report.summary_lines();
  const int code = report.exit_code();
  std::cout << (code == 0 ? "acceptance: all criteria passed" : "acceptance: NOT all criteria passed") << '\n';
  return code;
}
