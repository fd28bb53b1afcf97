#pragma once

#include <string>
#include <vector>

#include "tipsum/exact_int.hpp"

namespace tipsum {

/// Dense integer polynomial in one symbol. coefficient(i) multiplies x^i.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coefficients);

  static IntPolynomial constant(ExactInt c) { return IntPolynomial({std::move(c)}); }
  /// c * x^power.
  static IntPolynomial monomial(ExactInt c, std::size_t power);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<ExactInt>& coefficients() const { return coefficients_; }
  /// Coefficient of x^i; zero above the degree.
  ExactInt coefficient(std::size_t i) const;

  ExactInt evaluate(const ExactInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const ExactInt& scale);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(IntPolynomial p, const ExactInt& s) { return p *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Canonical text form: descending powers, explicit signs, unit
  /// coefficients elided, no spaces, ASCII '-' and '^'.
  /// Examples: "N^2", "-2N-1", "20N^3+60N^2+70N+30", "0" for the zero polynomial.
  std::string to_string(char symbol = 'N') const;

 private:
  void trim();

  std::vector<ExactInt> coefficients_;
};

}  // namespace tipsum
