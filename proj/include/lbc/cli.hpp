#pragma once

#include <ostream>

namespace lbc {

/// Entry point of the `ctxcheck` tool; returns the process exit code
/// (0 True, 1 False, 2 unknown, 3 error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lbc
