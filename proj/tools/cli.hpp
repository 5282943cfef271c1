#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simred {

/// Exit codes of the command-line front end.
inline constexpr int kExitDecided = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitScaleCap = 3;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simred
