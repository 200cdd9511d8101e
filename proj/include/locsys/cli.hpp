#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locsys::cli {

/// Runs the command line `args` (without the program name) and returns the
/// exit code: 0 pass or computed, 1 fail, 2 undetermined at prefix, 3 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace locsys::cli
