#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Runs the tool on `args` (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace qlgraph::cli
