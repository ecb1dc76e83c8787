#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgn::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. Payload goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mgn::cli
