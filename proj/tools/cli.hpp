#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wirecube::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // usage or validation error
  kFailure = 2,   // verification failure, or search below the closed form
  kAbove = 3,     // search finished above the closed form
};

/// Runs one command line (args excludes the program name). Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirecube::cli
