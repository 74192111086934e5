#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace p5col {

/// Exit codes of the p5color tool.
enum ExitCode : int {
  exit_sat = 0,
  exit_unsat = 1,
  exit_input_error = 2,
  exit_budget = 3,
};

/// Runs the p5color command line; args[0] is the program name. The report
/// and command output go to out, diagnostics and traces to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p5col
