#include "simforest/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace simforest {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> grid) {
  rows_ = grid.size();
  cols_ = rows_ == 0 ? 0 : grid.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : grid) {
    if (row.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return data_[r * cols_ + c];
}

const BigInt& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return data_[r * cols_ + c];
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("IntMatrix: incompatible shapes for product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const BigInt& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const BigInt& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::plus_scalar_diagonal(const BigInt& t) const {
  if (!is_square())
    throw std::invalid_argument("plus_scalar_diagonal: matrix not square");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) += t;
  return out;
}

IntMatrix IntMatrix::plus_diagonal(const std::vector<BigInt>& d) const {
  if (!is_square() || d.size() != rows_)
    throw std::invalid_argument("plus_diagonal: shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) += d[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << (*this)(r, c).str();
  }
  os << "] (" << rows_ << "x" << cols_ << ")";
  return os.str();
}

}  // namespace simforest
