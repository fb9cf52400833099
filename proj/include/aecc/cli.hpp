#pragma once

#include <iosfwd>

namespace aecc {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aecc
