#pragma once

#include <string>
#include <vector>

namespace chebderiv {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or bench mismatch
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output that would go
/// to a file via --output is written there and not echoed into `out`.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace chebderiv
