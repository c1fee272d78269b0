#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autcode::cli {

/// Exit codes: 0 success, 1 a checked property is false, 2 input or domain error,
/// 3 capacity exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapacity = 3;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autcode::cli
