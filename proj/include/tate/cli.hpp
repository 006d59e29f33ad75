#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tate::cli {

enum Exit : int { ok = 0, verification_failure = 1, input_error = 2, inconclusive = 3 };

// Runs one `tatecoh` invocation; args excludes the program name.  Tables and
// verdicts go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tate::cli
