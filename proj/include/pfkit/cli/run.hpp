#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pfkit` tool. `args` excludes the program name.
/// Without --json and --csv the JSON report goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace pfkit::cli
