#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rhosym::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse_error = 1,
  exit_numerical_failure = 2,
  exit_golden_mismatch = 3,
};

/// Runs one command. `args` excludes the program name. JSON or CSV goes to
/// `out`; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rhosym::cli
