#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace simforest {

// Exact arbitrary-precision scalars used throughout the library.  All
// determinants, weights and polynomial coefficients are computed without
// rounding; rationals appear only transiently (polynomial interpolation).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

inline BigInt abs_of(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace simforest
