#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braid::cli {

// Runs one subcommand; returns the process exit code (0 success, 1 domain
// error, 2 usage error).  Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braid::cli
