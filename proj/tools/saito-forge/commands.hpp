#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sf::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

// Runs one saito-forge invocation. args excludes the program name.
// Returns 0 when every check passes, 1 on a failed check or computation
// error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sf::cli
