#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secrecy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Runs the command line (without the program name). Results go to the
/// --out file or `out`; diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secrecy::cli
