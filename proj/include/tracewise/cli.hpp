#pragma once

#include <iosfwd>

namespace tracewise {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitNegative = 3, kExitInternal = 4 };

/// Entry point of the `tracewise` command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tracewise
