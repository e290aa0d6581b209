#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ainf {

// Exit codes: 0 all requested checks hold, 2 invalid input, 3 a requested
// verification failed. Argument parsing errors use the parser's own nonzero
// codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ainf
