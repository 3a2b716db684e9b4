#pragma once

#include <string>
#include <vector>

namespace gel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct CommandResult {
  int status = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one command line (argv[0] is the program name). Reads GEL_MAX_ORDER
/// from the environment to override the construction capacity limit.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace gel
