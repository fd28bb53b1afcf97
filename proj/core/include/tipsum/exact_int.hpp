#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tipsum {

/// Signed integer of unbounded magnitude. Every arithmetic operation is exact.
///
/// Thin value type over a GMP integer; kept as its own type so the rest of the
/// library never depends on GMP expression templates leaking through `auto`.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  ExactInt(int v) : ExactInt(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Surrounding whitespace is
  /// not accepted; callers trim first.
  static std::optional<ExactInt> parse(std::string_view text);

  ExactInt& operator+=(const ExactInt& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactInt& operator-=(const ExactInt& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactInt& operator*=(const ExactInt& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }
  ExactInt operator-() const { return ExactInt(mpz_class(-value_)); }

  /// Exact quotient; the divisor must divide the dividend.
  ExactInt divexact(const ExactInt& divisor) const;

  /// this^exponent, with 0^0 = 1.
  ExactInt pow(unsigned long exponent) const;

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(10); }

  const mpz_class& raw() const { return value_; }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

}  // namespace tipsum
