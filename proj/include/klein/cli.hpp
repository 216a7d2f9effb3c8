#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klein {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 domain or validation error, 2 syntax error,
/// 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klein
