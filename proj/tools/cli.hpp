#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gda::cli {

enum ExitCode : int { success = 0, verification_failure = 1, internal_error = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gda::cli
