#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistlab::cli {

enum ExitCode { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

/// Runs one CLI invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistlab::cli
