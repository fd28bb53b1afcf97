#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tipsum/exact_int.hpp"
#include "tipsum/op_count.hpp"

namespace tipsum::costmodel {

// Coefficient generation is precomputation and never counted; only the
// per-sample dataflow and the final combine are.

/// Cascade method: {general 0, constant K+1, additions (K+1)N - 1}.
OpCount predict_proposed(int power, std::int64_t length);

/// Addition-chain baseline: {general N(l(K)+1) for K >= 1 else 0, constant 0,
/// additions N-1}, where l(K) is the optimal chain length.
OpCount predict_baseline(int power, std::int64_t length);

/// N * l(K): the baseline's multiplications excluding the multiply by v[n].
std::uint64_t predict_baseline_chain_mults(int power, std::int64_t length);

/// Runs the cascade over v with counters attached. Empty input counts nothing.
OpCount measure_proposed(std::span<const ExactInt> v, int power);

struct BaselineMeasurement {
  OpCount ops;
  std::uint64_t chain_mults = 0;
};

/// Runs the addition-chain baseline over v with counters attached.
BaselineMeasurement measure_baseline(std::span<const ExactInt> v, int power);

struct ComplexityReport {
  int power = 0;
  std::int64_t length = 0;
  OpCount proposed;
  OpCount baseline;
  std::uint64_t baseline_chain_only_mults = 0;
};

/// Cross product of powers x lengths, powers outermost.
std::vector<ComplexityReport> complexity_table(std::span<const int> powers, std::span<const std::int64_t> lengths);

/// CSV with header K,N,method,general_mults,constant_mults,additions. Each
/// report becomes three lines: method "proposed", "baseline" (multiplications
/// include the multiply by v[n]) and "baseline_chain" (chain multiplications
/// only).
void write_csv(std::ostream& os, std::span<const ComplexityReport> reports);

}  // namespace tipsum::costmodel
