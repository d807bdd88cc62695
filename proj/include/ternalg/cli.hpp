#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternalg {

/// Runs one CLI command (arguments without the program name), writing a JSON
/// report to `out` and diagnostics to `err`. Returns 0 when every check
/// passed, 1 when a check failed, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ternalg
