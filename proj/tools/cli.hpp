#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsb::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kViolation = 1,
    kUsage = 2,
    kCapacity = 3,
};

/// Runs the `lsb` tool. `args` excludes the program name; `in` stands in for
/// stdin when no input file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lsb::cli
