#include "tipsum/coefficients.hpp"

#include <stdexcept>
#include <string>

#include "tipsum/combinatorics.hpp"

namespace tipsum {
namespace {

void validate(int power, std::int64_t length) {
  if (power < 0) throw std::domain_error("coefficients: power K must be >= 0, got " + std::to_string(power));
  if (length < 1) throw std::domain_error("coefficients: length N must be >= 1, got " + std::to_string(length));
}

ExactInt alternating(std::int64_t j) { return (j % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

}  // namespace

CoefficientSet coefficients_closed(int power, std::int64_t length) {
  validate(power, length);
  CoefficientSet set{power, length, {}};
  set.values.reserve(static_cast<std::size_t>(power) + 1);
  for (int k = 1; k <= power + 1; ++k) {
    ExactInt ck(0);
    for (int j = 0; j <= k - 1; ++j) {
      ck += alternating(j) * exactmath::binomial(k - 1, j) * exactmath::ipow(length + j, power);
    }
    set.values.push_back(std::move(ck));
  }
  return set;
}

CoefficientSet coefficients_stirling(int power, std::int64_t length) {
  validate(power, length);
  CoefficientSet set{power, length, {}};
  set.values.reserve(static_cast<std::size_t>(power) + 1);
  for (int k = 1; k <= power + 1; ++k) {
    ExactInt inner(0);
    for (int m = k - 1; m <= power; ++m) {
      inner += exactmath::binomial(power, m) * exactmath::ipow(length, power - m) *
               exactmath::stirling2(m, k - 1);
    }
    set.values.push_back(alternating(k - 1) * exactmath::factorial(k - 1) * inner);
  }
  return set;
}

std::vector<IntPolynomial> coefficient_polynomials(int power) {
  if (power < 0) throw std::domain_error("coefficient_polynomials: power K must be >= 0");
  // (N+j)^K = sum_m C(K,m) j^(K-m) N^m
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(power) + 1);
  for (int k = 1; k <= power + 1; ++k) {
    std::vector<ExactInt> acc(static_cast<std::size_t>(power) + 1, ExactInt(0));
    for (int j = 0; j <= k - 1; ++j) {
      const ExactInt weight = alternating(j) * exactmath::binomial(k - 1, j);
      for (int m = 0; m <= power; ++m) {
        acc[static_cast<std::size_t>(m)] += weight * exactmath::binomial(power, m) * exactmath::ipow(j, power - m);
      }
    }
    out.emplace_back(std::move(acc));
  }
  return out;
}

}  // namespace tipsum
