#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planarlab::cli {

/// Stable exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kVerifyFailed = 4,
};

/// Runs one invocation. args excludes the program name. JSON and result text
/// go to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarlab::cli
