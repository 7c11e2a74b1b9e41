#pragma once

#include <ostream>

namespace ltl3 {

/// Entry point of the ltl3mon tool, with its streams injected so that tests
/// can drive it in process. Exit status: 0 ok, 1 failed --expect or
/// crosscheck mismatch, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ltl3
