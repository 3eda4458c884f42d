#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptg::cli {

enum ExitCode : int { ok = 0, negative = 1, unknown = 2, input_error = 3 };

/// Runs one command. `args` excludes the program name; "-" as a path reads
/// from `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ptg::cli
