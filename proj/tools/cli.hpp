#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zrank::cli {

/// Runs the command line `args` (without the program name). Records go to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 when every
/// check passes, 1 when a counterexample or failed check is found, 2 on a
/// usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zrank::cli
