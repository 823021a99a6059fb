#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arfkit {

// Executes one CLI command. args = [command, flags and file paths...].
// Exit contract: 0 success or verdict holds, 1 verdict fails, 2 input error.
// Reports go to out, diagnostics to err; both are byte-deterministic for a
// given command line and input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arfkit
