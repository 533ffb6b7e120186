#pragma once

#include <string>
#include <vector>

namespace rootpoly {

/// Runs the command line given argv-style arguments (program name excluded).
/// Returns the exit code and fills `out` with the report text.
/// Exit codes: 0 success, 1 domain error, 2 parse/usage error.
int run_cli(const std::vector<std::string>& args, std::string& out);

}  // namespace rootpoly
