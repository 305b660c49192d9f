#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycrystal {

// Exit codes returned by run_cli.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInconclusive = 2, kExitVerifyFailed = 3 };

// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycrystal
