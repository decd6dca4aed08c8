#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pclie::cli {

enum ExitCode : int {
  success = 0,
  math_failure = 1,  // not a GSB, dimension mismatch
  usage_error = 2,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pclie::cli
