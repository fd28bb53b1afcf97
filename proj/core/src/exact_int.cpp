#include "tipsum/exact_int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace tipsum {

ExactInt::ExactInt(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform; go via
  // the string form only when long is narrower than 64 bits.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    value_ = static_cast<long>(v);
  } else {
    value_.set_str(std::to_string(v), 10);
  }
}

std::optional<ExactInt> ExactInt::parse(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return std::nullopt;
  }
  // GMP rejects a leading '+'.
  const std::string digits(text[0] == '+' ? text.substr(1) : text);
  mpz_class v;
  if (v.set_str(digits, 10) != 0) return std::nullopt;
  return ExactInt(std::move(v));
}

ExactInt ExactInt::divexact(const ExactInt& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("ExactInt::divexact: division by zero");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt ExactInt::pow(unsigned long exponent) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

bool ExactInt::fits_int64() const {
  static const ExactInt lo(std::numeric_limits<std::int64_t>::min());
  static const ExactInt hi(std::numeric_limits<std::int64_t>::max());
  return lo <= *this && *this <= hi;
}

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("ExactInt does not fit in int64: " + to_string());
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(value_.get_si());
  } else {
    return static_cast<std::int64_t>(std::stoll(to_string()));
  }
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

}  // namespace tipsum
