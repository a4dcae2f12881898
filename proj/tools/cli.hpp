#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Parses and runs one subcommand. Reports go to `out` as JSON, errors to
/// `err` as a JSON object; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgs::cli
