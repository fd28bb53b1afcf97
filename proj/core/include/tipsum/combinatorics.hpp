#pragma once

#include <cstdint>

#include "tipsum/exact_int.hpp"

/// Exact integer combinatorics. All functions are pure and throw
/// std::domain_error for arguments outside their domain.
namespace tipsum::exactmath {

/// n!, with 0! = 1.
ExactInt factorial(std::int64_t n);

/// C(n, k) for n, k >= 0. Returns 0 when k > n.
ExactInt binomial(std::int64_t n, std::int64_t k);

/// Pochhammer symbol x(x+1)...(x+j-1); the empty product (j = 0) is 1.
ExactInt rising_factorial(std::int64_t x, std::int64_t j);

/// Stirling number of the second kind, evaluated through the explicit
/// alternating sum (1/k!) * sum_i (-1)^i C(k,i) (k-i)^n with 0^0 = 1.
/// S(0,0) = 1 and S(n,k) = 0 for k > n.
ExactInt stirling2(std::int64_t n, std::int64_t k);

/// base^exponent for a machine integer base, 0^0 = 1.
ExactInt ipow(std::int64_t base, std::int64_t exponent);

// The pair below is the identity that turns the Stirling form of the
// coefficients into the alternating binomial form:
//   (-1)^(k-1) (k-1)! S(m, k-1) == sum_{j=0}^{k-1} (-1)^j C(k-1, j) j^m

/// (-1)^(k-1) (k-1)! S(m, k-1), for m >= 0, k >= 1.
ExactInt appendix_identity_lhs(std::int64_t m, std::int64_t k);

/// sum_{j=0}^{k-1} (-1)^j C(k-1, j) j^m, for m >= 0, k >= 1, with 0^0 = 1.
ExactInt appendix_identity_rhs(std::int64_t m, std::int64_t k);

}  // namespace tipsum::exactmath
