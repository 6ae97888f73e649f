#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqforge::cli {

/// Exit codes: 0 pass or found, 1 negative mathematical result, 2 usage
/// error or malformed input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace gqforge::cli
