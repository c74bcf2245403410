#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plethysm::cli {

enum ExitCode : int { kOk = 0, kRelationFails = 1, kUsage = 2, kResource = 3, kCrossCheck = 4 };

// Runs one command line (without the program name); results go to `out`,
// diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace plethysm::cli
