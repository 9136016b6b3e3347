#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dvp::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kBudgetExceeded = 3,
};

/// Runs one invocation; `args` excludes the program name. Results go to `out`
/// (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.15g" (machine formats) or "%.9g" (human format).
std::string format_machine(double v);
std::string format_human(double v);

/// v rounded to 15 significant digits, the value a JSON reader gets back.
double round15(double v);

}  // namespace dvp::cli
