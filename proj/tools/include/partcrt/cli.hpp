#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partcrt::cli {

// Runs the command-line tool against explicit streams, so tests can drive it
// in process.  `args` excludes the program name.
//
// Exit codes: 0 success, 1 a verification or congruence check failed,
// 2 usage or input error, 3 construction violated a mathematical invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace partcrt::cli
