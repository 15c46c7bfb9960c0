#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace umbra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Process environment the CLI consults; passed in so dispatch stays pure.
struct Environment {
  // Value of UMBRA_TRUNCATION_BOUND, if set.
  std::optional<std::string> truncation_bound;

  static Environment from_process();
};

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
// or identity check fails and 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const Environment& env = {});

}  // namespace umbra::cli
