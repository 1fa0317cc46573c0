#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dualsomos::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kMath = 3 };

/// Runs one subcommand. The document goes to `out`; usage errors and the
/// diagnostic JSON of mathematical failures go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualsomos::cli
