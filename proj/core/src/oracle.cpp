#include "tipsum/oracle.hpp"

#include <stdexcept>
#include <string>

namespace tipsum::oracle {

ExactInt direct_sum(std::span<const ExactInt> v, int power) {
  if (power < 0) throw std::domain_error("direct_sum: power K must be >= 0, got " + std::to_string(power));
  ExactInt sum(0);
  for (std::size_t n = 0; n < v.size(); ++n) {
    const ExactInt index(static_cast<std::int64_t>(n));
    ExactInt term(1);
    for (int i = 0; i < power; ++i) term *= index;
    sum += term * v[n];
  }
  return sum;
}

BaselineResult baseline_sum(std::span<const ExactInt> v, int power) {
  if (power < 0) throw std::domain_error("baseline_sum: power K must be >= 0, got " + std::to_string(power));
  BaselineResult result{ExactInt(0), {}, 0};
  if (v.empty()) return result;

  if (power == 0) {
    result.value = v[0];
    for (std::size_t n = 1; n < v.size(); ++n) {
      result.value += v[n];
      ++result.ops.additions;
    }
    return result;
  }

  const AdditionChain chain = optimal_chain(power);
  for (std::size_t n = 0; n < v.size(); ++n) {
    OpCount chain_ops;
    const ExactInt index_power = chain_power(ExactInt(static_cast<std::int64_t>(n)), chain, &chain_ops);
    result.chain_mults += chain_ops.general_mults;
    result.ops += chain_ops;

    ExactInt term = index_power * v[n];
    ++result.ops.general_mults;
    if (n == 0) {
      result.value = std::move(term);
    } else {
      result.value += term;
      ++result.ops.additions;
    }
  }
  return result;
}

}  // namespace tipsum::oracle
