#pragma once

#include <string>
#include <vector>

namespace econlex::cli {

/// Runs one CLI invocation. argv excludes the program name.
/// Exit codes: 0 success, 1 runtime failure, 2 usage error.
int run(const std::vector<std::string>& argv);

}  // namespace econlex::cli
