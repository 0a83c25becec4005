#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace respeak {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs `respeak-eval` with `args` (args[0] is the program name). Commands:
/// score, ner, regress, predict, fixture.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace respeak
