#include "tipsum/polynomial.hpp"

#include <algorithm>

namespace tipsum {

IntPolynomial::IntPolynomial(std::vector<ExactInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(ExactInt c, std::size_t power) {
  std::vector<ExactInt> coeffs(power + 1, ExactInt(0));
  coeffs[power] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

ExactInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : ExactInt(0);
}

ExactInt IntPolynomial::evaluate(const ExactInt& x) const {
  // Horner
  ExactInt acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), ExactInt(0));
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const ExactInt& scale) {
  for (auto& c : coefficients_) c *= scale;
  trim();
  return *this;
}

std::string IntPolynomial::to_string(char symbol) const {
  if (is_zero()) return "0";
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const ExactInt& c = coefficients_[static_cast<std::size_t>(power)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const ExactInt magnitude = negative ? -c : c;
    if (power == 0 || magnitude != ExactInt(1)) out += magnitude.to_string();
    if (power >= 1) out += symbol;
    if (power >= 2) out += '^' + std::to_string(power);
  }
  return out;
}

}  // namespace tipsum
