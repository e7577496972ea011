#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurcalc::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics and usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurcalc::cli
