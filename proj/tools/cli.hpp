#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reeb::cli {

/// Runs one command line (args exclude the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 on success, 2 when a precondition
/// or validation fails, 1 on usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reeb::cli
