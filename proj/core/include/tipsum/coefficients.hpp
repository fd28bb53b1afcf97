#pragma once

#include <cstdint>
#include <vector>

#include "tipsum/exact_int.hpp"
#include "tipsum/polynomial.hpp"

namespace tipsum {

/// The K+1 constants c_1..c_{K+1} that combine accumulator outputs into
/// sum_n n^K v[n] for a sequence of length N.
///
/// Indexing: the mathematical c_k (k = 1..K+1) lives at values[k-1]. Use c(k)
/// for the 1-based view.
struct CoefficientSet {
  int power = 0;             // K
  std::int64_t length = 1;   // N
  std::vector<ExactInt> values;

  const ExactInt& c(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
  std::size_t size() const { return values.size(); }

  /// The representation is unique on the sample grid only when N >= K+1.
  bool unique_on_grid() const { return length >= static_cast<std::int64_t>(power) + 1; }

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

/// c_k = sum_{j=0}^{k-1} (-1)^j C(k-1, j) (N+j)^K.
///
/// The alternating sum is the (k-1)-th forward difference of (N+j)^K, which is
/// why c_k is a polynomial of degree K-(k-1) in N. N < K+1 is accepted: the
/// identity behind the coefficients holds for every integer n, only uniqueness
/// on the grid 0..N-1 is lost.
CoefficientSet coefficients_closed(int power, std::int64_t length);

/// c_k = (-1)^(k-1) (k-1)! sum_{m=k-1}^{K} C(K, m) N^(K-m) S(m, k-1).
/// Independent route through Stirling numbers; must agree with
/// coefficients_closed everywhere.
CoefficientSet coefficients_stirling(int power, std::int64_t length);

/// c_1(N)..c_{K+1}(N) as polynomials in N, built by binomial expansion of
/// (N+j)^K inside the closed form.
std::vector<IntPolynomial> coefficient_polynomials(int power);

}  // namespace tipsum
