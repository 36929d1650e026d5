#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, malformed input, precondition violations
  kRefuted = 2,       // a construction's claim failed a check
  kInconclusive = 3,  // a search ran out of budget
  kIo = 4,            // unreadable or unwritable file
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlink::cli
