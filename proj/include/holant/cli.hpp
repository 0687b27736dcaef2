#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holant::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kResourceLimit = 2,
  kVerificationFailed = 3,
  kHard = 10,
};

// args[0] is the program name. Output goes to out, "error: ..." lines to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holant::cli
