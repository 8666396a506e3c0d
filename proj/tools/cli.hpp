#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ngpoly::cli {

enum ExitCode : int { conclusive = 0, error = 1, inconclusive = 2, usage = 64 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngpoly::cli
