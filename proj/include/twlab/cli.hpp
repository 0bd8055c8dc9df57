#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tw {

inline constexpr const char* twlab_version = "1.0.0";

// Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical
// non-convergence.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_data = 3;
inline constexpr int exit_numeric = 4;

// Run the command line driver in-process.  `args` excludes the program
// name.  All normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// argv-style wrapper used by the binary's main().
int run_cli(int argc, char** argv);

}  // namespace tw
