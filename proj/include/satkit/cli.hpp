#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satkit::cli {

// Exit codes: 0 ok, 1 failed checks or bad input, 2 internal error.
enum ExitCode { Ok = 0, Failure = 1, Internal = 2 };

// Arguments exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satkit::cli
