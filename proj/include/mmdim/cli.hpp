// cli.hpp -- the mmdim command-line front end as a callable function

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmdim::cli {

/// Exit codes besides 0 (success, including an infeasible `verify`).
inline constexpr int kExitBudget = 2;    ///< search stopped by its budget
inline constexpr int kExitUsage = 64;    ///< bad flags or parameter values
inline constexpr int kExitDataErr = 65;  ///< malformed strategy input
inline constexpr int kExitNoInput = 66;  ///< input file cannot be opened
inline constexpr int kExitSoftware = 70; ///< internal error

/// Runs one command. `args` excludes the program name. Strategy input is
/// read from `in` when no file (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mmdim::cli
