#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibcx {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibcx
