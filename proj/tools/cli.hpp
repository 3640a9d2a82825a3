#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iecp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns 0 on feasible/verified/success, 1 on
/// infeasible/failed verification, 2 on usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iecp::cli
