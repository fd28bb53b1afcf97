#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tipsum/coefficients.hpp"
#include "tipsum/exact_int.hpp"

namespace tipsum::selfcheck {

using CoefficientProvider = std::function<CoefficientSet(int power, std::int64_t length)>;

struct Options {
  std::uint64_t seed = 20240101;
  /// Random sequences per (K, N) in the oracle-equivalence check.
  int trials_per_case = 3;
  /// Coefficient source under test. Replaced in fault-injection tests.
  CoefficientProvider coefficients = coefficients_closed;
};

struct Counterexample {
  int power = 0;
  std::int64_t length = 0;
  std::vector<ExactInt> samples;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs the randomized oracle-equivalence suite plus the exact identity
/// checks. Deterministic for a given seed. Each check stops at its first
/// counterexample.
Report run(const Options& options = {});

}  // namespace tipsum::selfcheck
