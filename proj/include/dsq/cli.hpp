// Command-line entry point, separated from main() so tests can drive it.
// Exit status: 0 success, 1 usage or input error, 2 falsification.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsq {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_falsified = 2;

// args excludes the program name. color enables ANSI output in text mode.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err, bool color = false);

}  // namespace dsq
