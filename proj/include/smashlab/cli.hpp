#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smashlab {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 a negative decision, 2 a usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace smashlab
