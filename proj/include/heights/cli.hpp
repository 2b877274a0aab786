#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heights::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable overriding the default seed of randomized suites.
inline constexpr const char* kSeedEnv = "HEIGHTS_SEED";

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`; structured error objects go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heights::cli
