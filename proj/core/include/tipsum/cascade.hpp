#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tipsum/coefficients.hpp"
#include "tipsum/exact_int.hpp"
#include "tipsum/op_count.hpp"

namespace tipsum {

/// Raised when a caller breaks an operation's precondition, e.g. finalizing
/// with coefficients generated for a different (K, N).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// K+1 accumulators in series, fed one sample at a time.
///
/// Stage k (1-based) implements A_k[n] = A_k[n-1] + A_{k-1}[n] with
/// A_0[n] = v[n] and all registers zero before the first sample. After N
/// samples,
///
///   A_k[N-1] = sum_n C(N-n+k-2, k-1) v[n]
///
/// and sum_n n^K v[n] = sum_k c_k A_k[N-1] for the coefficients of
/// coefficients_closed(K, N). Memory is K+1 registers no matter how long the
/// stream is.
///
/// Single writer: push() must be serialized. snapshot()/finalize() are const
/// and may run concurrently with each other.
class Cascade {
 public:
  explicit Cascade(int power);

  int power() const { return power_; }
  std::size_t stages() const { return registers_.size(); }
  std::int64_t samples_seen() const { return samples_seen_; }

  void push(const ExactInt& sample);

  /// Registers A_1..A_{K+1} after the samples pushed so far.
  std::span<const ExactInt> snapshot() const { return registers_; }

  /// sum_k c_k A_k. Requires coeffs.power == power() and
  /// coeffs.length == samples_seen() >= 1. Does not mutate the cascade, so it
  /// can be called after any prefix to get a running result.
  ///
  /// When `ops` is non-null, the K+1 constant multiplications and K combining
  /// additions are added to it.
  ExactInt finalize(const CoefficientSet& coeffs, OpCount* ops = nullptr) const;

  /// One result per requested power K' <= power(), each using its own
  /// coefficients for N = samples_seen() over the first K'+1 registers.
  /// A single cascade therefore serves every power up to power().
  ///
  /// When `ops` is non-null it receives one OpCount per power: the push
  /// additions of the first K'+1 stages plus that power's combine step.
  std::vector<ExactInt> multi_moment_finalize(std::span<const int> powers,
                                              std::vector<OpCount>* ops = nullptr) const;

  /// Additions performed while pushing, restricted to the first `stage_count`
  /// accumulators. The very first sample lands in zeroed registers and is not
  /// counted, which gives (K+1)(N-1) over N samples.
  OpCount push_ops(std::size_t stage_count) const;
  OpCount push_ops() const { return push_ops(stages()); }

 private:
  int power_;
  std::vector<ExactInt> registers_;
  std::vector<std::uint64_t> stage_additions_;
  std::int64_t samples_seen_ = 0;
};

/// Bundles (K, N) for the fixed-length case where coefficients are
/// precomputed before the stream starts.
struct MomentRequest {
  int power = 0;
  std::int64_t length = 1;

  CoefficientSet precompute() const { return coefficients_closed(power, length); }
};

/// Double-precision variant of Cascade. Registers grow like N^K * max|v|, so
/// results are only approximate once they pass 2^53; use Cascade when the
/// exact value matters.
class FloatCascade {
 public:
  explicit FloatCascade(int power);

  int power() const { return power_; }
  std::int64_t samples_seen() const { return samples_seen_; }
  void push(double sample);
  std::span<const double> snapshot() const { return registers_; }

  /// Coefficients are converted from exact integers to double.
  double finalize(const CoefficientSet& coeffs) const;
  std::vector<double> multi_moment_finalize(std::span<const int> powers) const;

 private:
  int power_;
  std::vector<double> registers_;
  std::int64_t samples_seen_ = 0;
};

}  // namespace tipsum
