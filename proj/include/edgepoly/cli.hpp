#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgepoly {

/// Exit codes of `classify`; other subcommands use 0 for success, 1 for a
/// failed check or precondition, 2 for non-Fano input and >= 3 for errors.
enum ExitCode : int {
  kRigid = 0,
  kNotCertified = 1,
  kNotFano = 2,
  kInputError = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (args[0] is the program name). Graph input is
/// read from the positional path, or from `in` when it is "-" or missing.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace edgepoly
