#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperner::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kUsage = 2 };

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sperner::cli
