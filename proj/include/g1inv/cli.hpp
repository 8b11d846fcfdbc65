#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g1inv::cli {

enum ExitCode : int {
    kOk = 0,
    kSingular = 1,
    kMalformed = 2,
    kInternal = 3,
};

/// Runs one command. args excludes the program name. Standard input is read
/// from `in` when the model path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace g1inv::cli
