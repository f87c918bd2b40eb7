#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alterlda::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 library error, 2 usage or config error, 3 I/O.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace alterlda::cli
