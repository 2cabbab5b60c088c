#pragma once

// Property verification suite: every check below draws its random samples
// from a named deterministic stream, runs one family of identities at a
// pinned tolerance, and reports the worst residual observed.  The CLI
// `verify` subcommand and the acceptance test binary both run this.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncx/algebra.hpp"

namespace ncx {

struct VerifyOptions {
  std::uint64_t seed = 7;
  int n_max = 8;       // dimensions used: {2,3,4,5,6,8} capped here
  int samples = 200;   // random samples per check and dimension
  Tolerances tol{};
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst residual observed
  double tolerance = 0.0;  // threshold the worst residual was held to
  std::string detail;      // which sub-check produced the worst residual
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

void print_results(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ncx
