#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgf::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kPrecondition = 2,
  kInconclusive = 3,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgf::cli
