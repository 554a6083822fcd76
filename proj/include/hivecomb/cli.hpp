#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hivecomb {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidInput = 2,
  kVerificationFailed = 3,
  kInfeasible = 4,
  kNotADiagram = 5,
};

/// Runs one subcommand. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hivecomb
