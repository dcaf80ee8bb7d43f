#pragma once

#include <iosfwd>

namespace levi {

/// Runs the levi command line. Returns 0 when every check passes, 1 when a
/// check reports findings (each on a "FAIL ..." line) and 2 on malformed
/// input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace levi
