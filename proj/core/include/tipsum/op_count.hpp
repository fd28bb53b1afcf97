#pragma once

#include <cstdint>

namespace tipsum {

/// Tally of arithmetic operations in one execution.
///
/// general_mults: both operands vary at runtime (full multiplier).
/// constant_mults: one operand is a precomputed constant.
struct OpCount {
  std::uint64_t general_mults = 0;
  std::uint64_t constant_mults = 0;
  std::uint64_t additions = 0;

  OpCount& operator+=(const OpCount& rhs) {
    general_mults += rhs.general_mults;
    constant_mults += rhs.constant_mults;
    additions += rhs.additions;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

}  // namespace tipsum
