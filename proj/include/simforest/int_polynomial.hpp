#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "simforest/bigint.hpp"

namespace simforest {

// Univariate polynomial with integer coefficients, stored low degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  // c0 + c1 * x
  static IntPolynomial linear(BigInt c0, BigInt c1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k; zero beyond the degree.
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& t) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial pow(unsigned e) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  // Human-readable form, e.g. "x^3 + 6*x^2 + 9*x".
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[k] multiplies x^k; no trailing zeros
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

}  // namespace simforest
