#pragma once

#include "recomb/config.hpp"

namespace recomb {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;   // unreadable / invalid config
inline constexpr int kExitSolver = 3;   // model or solver error
inline constexpr int kExitIo = 4;       // output could not be written
inline constexpr int kExitChecks = 5;   // Check ran, some property failed

// Execute one command: solve / simulate / sweep / check, writing the
// corresponding CSV files into cfg.output_dir. Errors are reported as a
// single machine-readable "error kind=... message=..." line on stderr and
// mapped to the codes above.
int run(const RunConfig& cfg);

}  // namespace recomb
