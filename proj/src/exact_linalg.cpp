#include "simforest/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace simforest {

namespace {

// One fraction-free (Bareiss) elimination step on the trailing block:
// entries of the reduced block are themselves minors of the original
// matrix, so the division by the previous pivot is exact.
void bareiss_step(IntMatrix& a, std::size_t k, const BigInt& prev_pivot,
                  std::size_t row_end, std::size_t col_end) {
  const BigInt& pivot = a(k, k);
  for (std::size_t i = k + 1; i < row_end; ++i) {
    for (std::size_t j = k + 1; j < col_end; ++j) {
      a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev_pivot;
    }
    a(i, k) = 0;
  }
}

}  // namespace

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;  // empty product convention

  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Row pivoting only; any nonzero pivot keeps Bareiss exact.
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    bareiss_step(a, k, prev, n, n);
    prev = a(k, k);
  }
  return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

int rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  while (r < rows && r < cols) {
    // Full pivoting: find any nonzero entry in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows && pi == rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    if (pi != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pi, j));
    if (pj != r)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, r), a(i, pj));
    bareiss_step(a, r, prev, rows, cols);
    prev = a(r, r);
    ++r;
  }
  return static_cast<int>(r);
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) {
  auto check = [](const std::vector<int>& idx, std::size_t bound,
                  const char* what) {
    std::unordered_set<int> seen;
    for (int i : idx) {
      if (i < 0 || static_cast<std::size_t>(i) >= bound)
        throw std::out_of_range(std::string("submatrix: ") + what +
                                " index out of bounds");
      if (!seen.insert(i).second)
        throw std::invalid_argument(std::string("submatrix: duplicate ") +
                                    what + " index");
    }
  };
  check(row_idx, m.rows(), "row");
  check(col_idx, m.cols(), "column");

  IntMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      out(r, c) = m(static_cast<std::size_t>(row_idx[r]),
                    static_cast<std::size_t>(col_idx[c]));
  return out;
}

IntPolynomial char_poly_shifted(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("char_poly_shifted: matrix not square");
  const std::size_t n = m.rows();

  // Evaluate det(m + t*Id) at t = 0..n, then build the Newton form of the
  // degree-n interpolant over the rationals.
  std::vector<BigRat> dd;
  dd.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t)
    dd.emplace_back(det(m.plus_scalar_diagonal(BigInt(t))));
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRat(level);

  // Expand sum_k dd[k] * (x)(x-1)...(x-k+1) into monomial coefficients.
  std::vector<BigRat> acc(n + 1, BigRat(0));
  std::vector<BigRat> basis{BigRat(1)};  // product of (x - j), j < k
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) acc[j] += dd[k] * basis[j];
    if (k < n) {
      // basis *= (x - k)
      std::vector<BigRat> next(basis.size() + 1, BigRat(0));
      const BigRat shift(-static_cast<long long>(k));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        next[j + 1] += basis[j];
        next[j] += basis[j] * shift;
      }
      basis = std::move(next);
    }
  }

  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (boost::multiprecision::denominator(acc[k]) != 1)
      throw std::logic_error(
          "char_poly_shifted: interpolation produced a non-integer coefficient");
    coeffs[k] = boost::multiprecision::numerator(acc[k]);
  }
  IntPolynomial result{std::move(coeffs)};
  if (result.degree() != static_cast<int>(n) || result.coeff(n) != 1)
    throw std::logic_error("char_poly_shifted: result is not monic of full degree");
  return result;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block as pivot.
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          BigInt mag = abs_of(a(i, j));
          if (pi == rows || mag < best) {
            best = std::move(mag);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        s = steps;  // trailing block is zero: done overall
        break;
      }
      if (pi != s)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(s, j), a(pi, j));
      if (pj != s)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, s), a(i, pj));

      // Reduce the pivot column and row.  If any remainder survives, a
      // smaller pivot has appeared: go again.
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a(i, s) == 0) continue;
        BigInt q = a(i, s) / a(s, s);
        for (std::size_t j = s; j < cols; ++j) a(i, j) -= q * a(s, j);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a(s, j) == 0) continue;
        BigInt q = a(s, j) / a(s, s);
        for (std::size_t i = s; i < rows; ++i) a(i, j) -= q * a(i, s);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility: the pivot must divide the whole trailing
      // block; folding an offending row into the pivot row shrinks the
      // pivot on the next pass.
      bool divides_all = true;
      for (std::size_t i = s + 1; i < rows && divides_all; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (a(i, j) % a(s, s) != 0) {
            for (std::size_t jj = s; jj < cols; ++jj) a(s, jj) += a(i, jj);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s == steps) break;
  }

  SmithForm out;
  out.invariant_factors.resize(steps);
  for (std::size_t s = 0; s < steps; ++s)
    out.invariant_factors[s] = abs_of(a(s, s));
  return out;
}

}  // namespace simforest
