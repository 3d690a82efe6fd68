#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob3::cli {

/// Exit status: 0 success, 1 verification failure, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob3::cli
