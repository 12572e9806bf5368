#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtf::cli {

/// Process exit codes.
enum Exit : int { Ok = 0, Failures = 1, Usage = 2, Numeric = 3, Io = 4 };

/// Runs one command line (without the program name). Subcommands: eval,
/// const, check, oracle-diff.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtf::cli
