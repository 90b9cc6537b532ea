#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coha::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kResourceLimit = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// machine-readable errors to `err`; `in` feeds the batch subcommand.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coha::cli
