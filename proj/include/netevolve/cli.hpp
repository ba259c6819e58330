#pragma once

#include <iosfwd>

namespace netevolve {

/// Entry point of the `netevolve` tool. Returns the process exit status:
/// 0 ok, 2 configuration error, 3 parse error, 4 analysis error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netevolve
