#pragma once

#include <iosfwd>

namespace skein {

/// Command-line entry point. Returns 0 on success, 1 when a verification differs
/// and 2 on malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skein
