#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primroot::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kConsistent = 0,      // all checks agree with theory
  kInvariantFailed = 1,  // a theoretical invariant failed
  kInvalidInput = 2,
  kIoFailure = 3,
};

/// Environment variable naming the directory that relative --out paths resolve against.
inline constexpr const char* kOutDirEnv = "PRIMROOT_OUT_DIR";

/// Runs the command line `args` (without the program name). Normal output goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primroot::cli
