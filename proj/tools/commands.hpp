#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slp::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses the command line and runs one subcommand. Reports go to `out`,
/// diagnostics and warnings to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slp::cli
