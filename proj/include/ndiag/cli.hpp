#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndiag::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kContradiction = 2,
  kBudget = 3,
};

/// Runs the `ndiag` command line on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndiag::cli
