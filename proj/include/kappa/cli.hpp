#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kappa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Reads elements
/// from `in` when eval gets no --element.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kappa
