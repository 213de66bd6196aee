#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDegenerateInput = 3,
  kOracleMismatch = 4,
};

inline constexpr int kSchemaVersion = 1;

/// Default worker cap; overridden by the --threads flag.
inline constexpr const char* kThreadsEnv = "EXTREMAL_THREADS";

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
