#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cspp {

/// Runs one CLI command. `args` excludes the program name. Returns the exit
/// code: 0 ok, 1 usage or validation error, 2 solver disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cspp
