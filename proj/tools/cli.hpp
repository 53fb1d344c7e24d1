#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bern::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kLimit = 2,
  kVerificationFailed = 3,
};

// Environment variable consulted when --pi-cache is not given.
inline constexpr const char* kPiCacheEnv = "BERNOULLI_PI_CACHE";

// Runs the tool with argv-style arguments (args[0] is the program name).
// Results go to `out`; timings, progress and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bern::cli
