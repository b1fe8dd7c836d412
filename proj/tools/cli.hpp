#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace s2sym::cli {

/// Exit codes: 0 success, 2 input error, 3 domain rejection.
enum ExitCode : int { kOk = 0, kInputError = 2, kDomainRejection = 3 };

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s2sym::cli
