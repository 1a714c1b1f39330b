#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su3sb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceExceeded = 3,
};

/// Environment variable naming the default cache directory for `irrep`.
inline constexpr const char* kCacheEnvVar = "SU3SB_CACHE_DIR";

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su3sb::cli
