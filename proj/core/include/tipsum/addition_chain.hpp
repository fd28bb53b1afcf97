#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tipsum/exact_int.hpp"
#include "tipsum/op_count.hpp"

namespace tipsum {

/// An addition chain 1 = a_0 < a_1 < ... < a_r = target. Step i appends
/// a_{i+1} = a[first] + a[second]; computing x^target along the chain costs
/// one multiplication per step.
struct AdditionChain {
  using Step = std::pair<std::size_t, std::size_t>;

  std::int64_t target = 1;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }

  /// Chain elements a_0..a_r. Throws std::invalid_argument if a step refers
  /// forward.
  std::vector<std::int64_t> values() const;

  /// Every step refers to earlier elements and the last element is target.
  bool valid() const;
};

inline constexpr std::int64_t kMaxChainTarget = 64;

/// Shortest addition chain for `target` in [1, 64], by iterative-deepening
/// exhaustive search over ascending chains. Among chains of minimal length the
/// lexicographically smallest step sequence is returned.
AdditionChain optimal_chain(std::int64_t target);

/// base^chain.target with exactly chain.length() multiplications. Each one is
/// added to ops->general_mults when ops is non-null.
ExactInt chain_power(const ExactInt& base, const AdditionChain& chain, OpCount* ops = nullptr);

}  // namespace tipsum
