#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidknot {

// Parses and runs one command line (program name excluded). Results go
// to `out`, diagnostics to `err`; the return value is the process exit
// status, zero exactly when no error was signaled.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace braidknot
