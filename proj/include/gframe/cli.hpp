#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gframe {

// Exit status contract of the command-line tool.
enum ExitStatus : int {
    kExitPass = 0,
    kExitCheckFailure = 1,  // a check failed or a construction hypothesis does not hold
    kExitUsage = 2,         // bad arguments, unreadable or malformed documents
};

// Runs one command line (args excludes the program name). The report goes to
// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gframe
