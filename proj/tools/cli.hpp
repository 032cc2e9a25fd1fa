#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace natbdd::cli {

enum ExitCode : int { success = 0, domain_error = 1, usage_error = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace natbdd::cli
