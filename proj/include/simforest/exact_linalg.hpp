#pragma once

#include <vector>

#include "simforest/bigint.hpp"
#include "simforest/int_matrix.hpp"
#include "simforest/int_polynomial.hpp"

namespace simforest {

// Diagonal of the Smith normal form: nonnegative invariant factors with
// d1 | d2 | ... ; zero factors (if any) come last.  There are exactly
// min(rows, cols) entries.
struct SmithForm {
  std::vector<BigInt> invariant_factors;
};

// Exact determinant by fraction-free (Bareiss) elimination.
// The empty 0 x 0 matrix has determinant 1.  Throws std::invalid_argument
// for non-square input.
BigInt det(const IntMatrix& m);

// Exact rank by fraction-free elimination with full pivoting.
int rank(const IntMatrix& m);

// Selects rows/cols by index, preserving the given order.  Indices must be
// in bounds and duplicate-free (std::out_of_range / std::invalid_argument).
IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx);

// det(m + x * Id) as an exact integer polynomial: monic of degree m.rows().
// Computed by evaluating the determinant at x = 0..n and interpolating over
// the rationals; the result is asserted to be integral.
IntPolynomial char_poly_shifted(const IntMatrix& m);

// Smith normal form over the integers (elementary row/column operations,
// smallest-|pivot| selection).
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace simforest
