#include "simforest/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace simforest {

namespace {
const BigInt kZero = 0;

void strip_trailing_zeros(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::linear(BigInt c0, BigInt c1) {
  return IntPolynomial({std::move(c0), std::move(c1)});
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;  // Horner, high to low
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial acc = constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1 && k > 0);
    if (!unit) os << a.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace simforest
