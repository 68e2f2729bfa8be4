#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcg {

// Exit codes of every command.
enum ExitCode { kExitPass = 0, kExitVerdictFail = 1, kExitInputError = 2, kExitOutOfTheory = 3 };

// Runs one command line (without the program name). JSON results go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcg
