#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "simforest/bigint.hpp"

namespace simforest {

// Dense matrix of arbitrary-precision integers, row-major storage.
// Degenerate shapes (0 x n, n x 0, 0 x 0) are valid and arise naturally
// as boundary matrices of degenerate complexes and empty submatrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Convenience for literals in tests: {{1, 2}, {3, 4}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> grid);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Bounds-checked access.
  BigInt& at(std::size_t r, std::size_t c);
  const BigInt& at(std::size_t r, std::size_t c) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;

  // Returns this + t * Id; requires a square matrix.
  IntMatrix plus_scalar_diagonal(const BigInt& t) const;

  // Returns this + diag(d); requires a square matrix with d.size() == rows().
  IntMatrix plus_diagonal(const std::vector<BigInt>& d) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << m.to_string();
}

}  // namespace simforest
