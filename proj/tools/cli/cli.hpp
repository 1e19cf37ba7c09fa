#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcdsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolation = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Subcommands:
/// construct, analyze, crossings, check, sidon, reproduce-paper.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcdsum::cli
