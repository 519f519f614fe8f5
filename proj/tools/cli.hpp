#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linleg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one subcommand. `args` excludes the program name. The document is
/// written to `out` (or to --out FILE); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linleg::cli
