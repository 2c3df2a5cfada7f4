#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solo {

// Runs one command-line invocation; `args` excludes the program name.
// Results go to `out`, diagnostics to `err`. Exit codes:
//   0  solvable / verification OK / command succeeded
//   1  unsolvable / verification failed / sweep found mismatches
//   2  usage or domain errors (unknown flags, unsupported family,
//      instance outside a decider's domain, ...)
//   3  instance or witness file parse errors (message carries line/column)
//   4  exhaustive-search state cap exceeded, or no valid placement found
//      while compiling an instance
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solo
