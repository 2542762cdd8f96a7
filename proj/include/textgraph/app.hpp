#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace textgraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,        // bad option values, unreadable or missing files
  kExitInput = 3,         // malformed input file or a document without words
  kExitTopicNotFound = 4,
  kExitBelowThreshold = 5,
};

// Runs the command line (without the program name). Everything a command
// prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace textgraph::cli
