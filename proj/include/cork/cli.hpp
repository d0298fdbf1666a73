#pragma once

// Command-line front end. Exit codes: 0 success, 1 negative or aborted,
// 2 input error, 3 inconclusive.

#include <iosfwd>
#include <string>
#include <vector>

namespace cork::cli {

enum ExitCode : int { ok = 0, negative = 1, input_error = 2, inconclusive = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cork::cli
