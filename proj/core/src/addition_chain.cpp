#include "tipsum/addition_chain.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tipsum {

std::vector<std::int64_t> AdditionChain::values() const {
  std::vector<std::int64_t> out{1};
  out.reserve(steps.size() + 1);
  for (const auto& [a, b] : steps) {
    if (a >= out.size() || b >= out.size()) throw std::invalid_argument("AdditionChain: step refers forward");
    out.push_back(out[a] + out[b]);
  }
  return out;
}

bool AdditionChain::valid() const {
  std::vector<std::int64_t> v{1};
  for (const auto& [a, b] : steps) {
    if (a >= v.size() || b >= v.size()) return false;
    v.push_back(v[a] + v[b]);
  }
  return v.back() == target;
}

namespace {

class ChainSearch {
 public:
  explicit ChainSearch(std::int64_t target) : target_(target) {}

  bool run(std::size_t depth_limit) {
    limit_ = depth_limit;
    values_.assign(1, 1);
    steps_.clear();
    return descend();
  }

  std::vector<AdditionChain::Step> steps() const { return steps_; }

 private:
  bool descend() {
    const std::int64_t last = values_.back();
    if (last == target_) return true;
    const std::size_t remaining = limit_ - steps_.size();
    if (remaining == 0) return false;
    // Doubling is the fastest possible growth.
    if ((last << remaining) < target_) return false;

    std::vector<std::int64_t> tried;
    const std::size_t n = values_.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const std::int64_t next = values_[a] + values_[b];
        if (next <= last || next > target_) continue;
        if ((next << (remaining - 1)) < target_) continue;
        // Same value reached again at this node has the same subtree; the
        // first (lexicographically smaller) step already explored it.
        bool seen = false;
        for (const std::int64_t t : tried) seen = seen || (t == next);
        if (seen) continue;
        tried.push_back(next);

        values_.push_back(next);
        steps_.emplace_back(a, b);
        if (descend()) return true;
        steps_.pop_back();
        values_.pop_back();
      }
    }
    return false;
  }

  std::int64_t target_;
  std::size_t limit_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<AdditionChain::Step> steps_;
};

}  // namespace

AdditionChain optimal_chain(std::int64_t target) {
  if (target < 1 || target > kMaxChainTarget) {
    throw std::domain_error("optimal_chain: target must be in [1, " + std::to_string(kMaxChainTarget) +
                            "], got " + std::to_string(target));
  }
  ChainSearch search(target);
  // ceil(log2 target) is a lower bound on the length.
  const auto lower = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(target - 1)));
  for (std::size_t depth = lower;; ++depth) {
    if (search.run(depth)) return AdditionChain{target, search.steps()};
  }
}

ExactInt chain_power(const ExactInt& base, const AdditionChain& chain, OpCount* ops) {
  std::vector<ExactInt> powers;
  powers.reserve(chain.length() + 1);
  powers.push_back(base);
  for (const auto& [a, b] : chain.steps) {
    if (a >= powers.size() || b >= powers.size()) throw std::invalid_argument("chain_power: invalid chain");
    powers.push_back(powers[a] * powers[b]);
    if (ops != nullptr) ++ops->general_mults;
  }
  return powers.back();
}

}  // namespace tipsum
