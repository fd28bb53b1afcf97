#include "tipsum/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace tipsum::exactmath {
namespace {

void require_non_negative(std::int64_t v, const char* what) {
  if (v < 0) {
    throw std::domain_error(std::string(what) + " must be non-negative, got " + std::to_string(v));
  }
}

ExactInt sign_of_parity(std::int64_t e) { return (e % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

}  // namespace

ExactInt factorial(std::int64_t n) {
  require_non_negative(n, "factorial: n");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactInt(std::move(r));
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  require_non_negative(n, "binomial: n");
  require_non_negative(k, "binomial: k");
  if (k > n) return ExactInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactInt(std::move(r));
}

ExactInt rising_factorial(std::int64_t x, std::int64_t j) {
  require_non_negative(j, "rising_factorial: j");
  ExactInt r(1);
  for (std::int64_t i = 0; i < j; ++i) r *= ExactInt(x + i);
  return r;
}

ExactInt ipow(std::int64_t base, std::int64_t exponent) {
  require_non_negative(exponent, "ipow: exponent");
  return ExactInt(base).pow(static_cast<unsigned long>(exponent));
}

ExactInt stirling2(std::int64_t n, std::int64_t k) {
  require_non_negative(n, "stirling2: n");
  require_non_negative(k, "stirling2: k");
  if (k > n) return ExactInt(0);
  ExactInt sum(0);
  for (std::int64_t i = 0; i <= k; ++i) {
    sum += sign_of_parity(i) * binomial(k, i) * ipow(k - i, n);
  }
  return sum.divexact(factorial(k));
}

ExactInt appendix_identity_lhs(std::int64_t m, std::int64_t k) {
  require_non_negative(m, "appendix_identity_lhs: m");
  if (k < 1) throw std::domain_error("appendix_identity_lhs: k must be >= 1");
  return sign_of_parity(k - 1) * factorial(k - 1) * stirling2(m, k - 1);
}

ExactInt appendix_identity_rhs(std::int64_t m, std::int64_t k) {
  require_non_negative(m, "appendix_identity_rhs: m");
  if (k < 1) throw std::domain_error("appendix_identity_rhs: k must be >= 1");
  ExactInt sum(0);
  for (std::int64_t j = 0; j <= k - 1; ++j) {
    sum += sign_of_parity(j) * binomial(k - 1, j) * ipow(j, m);
  }
  return sum;
}

}  // namespace tipsum::exactmath
