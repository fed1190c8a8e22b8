#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrep {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2, kExitBudgetExceeded = 3 };

// args[0] is the program name. Writes the report to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep
