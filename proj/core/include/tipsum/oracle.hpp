#pragma once

#include <cstdint>
#include <span>

#include "tipsum/addition_chain.hpp"
#include "tipsum/exact_int.hpp"
#include "tipsum/op_count.hpp"

/// Brute-force evaluators of sum_{n=0}^{N-1} n^K v[n]. These are the ground
/// truth the cascade is checked against, so they stay deliberately naive.
namespace tipsum::oracle {

/// n^K by K-fold repeated multiplication (0^0 = 1), times v[n], summed.
/// An empty sequence sums to 0.
ExactInt direct_sum(std::span<const ExactInt> v, int power);

struct BaselineResult {
  ExactInt value;
  /// general_mults includes the per-sample multiplication by v[n].
  OpCount ops;
  /// Multiplications spent inside the addition chains only.
  std::uint64_t chain_mults = 0;
};

/// Per sample: n^K along an optimal addition chain, then one multiplication by
/// v[n]; K = 0 needs no multiplications at all. Every sample pays the same
/// cost, including n = 0. Additions: N-1.
BaselineResult baseline_sum(std::span<const ExactInt> v, int power);

}  // namespace tipsum::oracle
