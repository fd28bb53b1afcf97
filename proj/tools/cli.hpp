#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tipsum/selfcheck.hpp"

namespace tipsum::cli {

enum ExitCode : int {
  kOk = 0,
  kSelfcheckFailed = 1,
  kUsageError = 2,
  kEmptyInput = 3,
};

/// Test seams. Defaults reproduce the shipped tool.
struct Hooks {
  selfcheck::CoefficientProvider coefficients = coefficients_closed;
};

/// Runs the tool with `args` (excluding the program name). Samples are read
/// from `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

/// Tab-separated table of c_k(N) for K = 0..kmax, one row per K, no
/// trailing empty cells.
std::string format_coefficient_table(int kmax);

}  // namespace tipsum::cli
