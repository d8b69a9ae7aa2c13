#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphprod::cli {

/// Exit statuses. Decision commands use kOk / kNegative.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kParseError = 2;
inline constexpr int kSemanticError = 3;

/// Runs one command line (args excludes the program name). All regular
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphprod::cli
