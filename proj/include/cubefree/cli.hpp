#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubefree {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name; `in` feeds
/// `verify -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cubefree
