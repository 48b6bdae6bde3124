#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euclid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. With JSON output (the --json flag or
// json_default) exactly one object is written to `out`, errors included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool json_default = false);

}  // namespace euclid::cli
