#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cupn::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,     // parse or validation failure
    kSemanticError = 3,    // well-formed input that does not fit together
    kNotACocycle = 4,
    kTableMismatch = 5,
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cupn::cli
