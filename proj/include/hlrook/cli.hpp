#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlrook::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_counterexample = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlrook::cli
