#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "simforest/exact_linalg.hpp"
#include "simforest/rng.hpp"

using namespace simforest;

TEST_CASE("determinant: basics and edge cases") {
  CHECK(det(IntMatrix(0, 0)) == 1);  // empty product
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(IntMatrix{{2, 3, 1}, {4, 1, 0}, {7, 2, 5}}) == -49);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion on seeded matrices") {
  SplitMix64 rng(kDefaultSeed);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.next_int(0, 6));
    const IntMatrix m = oracles::random_matrix(rng, n, n, -9, 9);
    CHECK(det(m) == oracles::det_oracle(m));
  }
}

TEST_CASE("rank: basics, transpose symmetry, minor oracle") {
  CHECK(rank(IntMatrix(0, 0)) == 0);
  CHECK(rank(IntMatrix(3, 4)) == 0);  // zero matrix
  CHECK(rank(IntMatrix::identity(5)) == 5);
  CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank(IntMatrix{{1, 2}, {3, 4}, {5, 6}}) == 2);

  SplitMix64 rng(kDefaultSeed);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = static_cast<std::size_t>(rng.next_int(1, 4));
    const auto c = static_cast<std::size_t>(rng.next_int(1, 5));
    const IntMatrix m = oracles::random_matrix(rng, r, c, -3, 3);
    const int rk = rank(m);
    CHECK(rk == rank(m.transposed()));
    CHECK(rk == oracles::rank_oracle(m));
  }
}

TEST_CASE("char_poly_shifted: basics") {
  CHECK(char_poly_shifted(IntMatrix(0, 0)) == IntPolynomial::constant(1));
  // zero matrix: det(x*Id) = x^n
  CHECK(char_poly_shifted(IntMatrix(3, 3)) ==
        IntPolynomial({0, 0, 0, 1}));
  // diag(1,2): (x+1)(x+2)
  CHECK(char_poly_shifted(IntMatrix{{1, 0}, {0, 2}}) ==
        IntPolynomial({2, 3, 1}));
  CHECK_THROWS_AS(char_poly_shifted(IntMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("char_poly_shifted agrees with symbolic cofactor expansion") {
  SplitMix64 rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.next_int(1, 4));
    const IntMatrix m = oracles::random_matrix(rng, n, n, -5, 5);
    CHECK(char_poly_shifted(m) == oracles::char_poly_oracle(m));
  }
}

TEST_CASE("char_poly_shifted evaluates to shifted determinants") {
  SplitMix64 rng(kDefaultSeed + 2);
  const IntMatrix m = oracles::random_matrix(rng, 5, 5, -4, 4);
  const IntPolynomial p = char_poly_shifted(m);
  for (long long t : {-7LL, -1LL, 0LL, 2LL, 13LL})
    CHECK(p.evaluate(BigInt(t)) == det(m.plus_scalar_diagonal(BigInt(t))));
}

TEST_CASE("smith normal form: known forms") {
  CHECK(smith_normal_form(IntMatrix(0, 0)).invariant_factors.empty());
  CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors ==
        std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 6}}).invariant_factors ==
        std::vector<BigInt>{2, 6});
  // needs reordering along the divisibility chain
  CHECK(smith_normal_form(IntMatrix{{6, 0}, {0, 2}}).invariant_factors ==
        std::vector<BigInt>{2, 6});
  // unit content, determinant 4
  CHECK(smith_normal_form(IntMatrix{{2, 1}, {0, 2}}).invariant_factors ==
        std::vector<BigInt>{1, 4});
  // coprime diagonal merges
  CHECK(smith_normal_form(IntMatrix{{2, 0, 0}, {0, 3, 0}}).invariant_factors ==
        std::vector<BigInt>{1, 6});
  // rank deficiency: trailing zero factors
  CHECK(smith_normal_form(IntMatrix{{1, 2}, {2, 4}}).invariant_factors ==
        std::vector<BigInt>{1, 0});
  CHECK(smith_normal_form(IntMatrix(2, 3)).invariant_factors ==
        std::vector<BigInt>{0, 0});
}

TEST_CASE("smith normal form: seeded divisibility and determinant product") {
  SplitMix64 rng(kDefaultSeed + 3);
  int nonsingular = 0;
  while (nonsingular < 30) {
    const auto n = static_cast<std::size_t>(rng.next_int(1, 5));
    const IntMatrix m = oracles::random_matrix(rng, n, n, -6, 6);
    const BigInt dt = det(m);
    const SmithForm sf = smith_normal_form(m);
    REQUIRE(sf.invariant_factors.size() == n);
    BigInt product = 1;
    for (std::size_t i = 0; i < sf.invariant_factors.size(); ++i) {
      const BigInt& f = sf.invariant_factors[i];
      CHECK(f >= 0);
      if (i > 0 && f != 0) {
        // chain: each factor divides the next nonzero one
        const BigInt& prev = sf.invariant_factors[i - 1];
        REQUIRE(prev != 0);
        CHECK(f % prev == 0);
      }
      product *= f;
    }
    if (dt != 0) {
      ++nonsingular;
      CHECK(product == abs_of(dt));
    } else {
      CHECK(product == 0);
    }
  }
}

TEST_CASE("submatrix: selection and validation") {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(submatrix(m, {0, 1, 2}, {0, 1, 2}) == m);
  CHECK(submatrix(m, {2, 0}, {1}) == IntMatrix{{8}, {2}});
  CHECK(submatrix(m, {}, {}) == IntMatrix(0, 0));
  CHECK(det(submatrix(m, {}, {})) == 1);
  CHECK_THROWS_AS(submatrix(m, {0, 3}, {0}), std::out_of_range);
  CHECK_THROWS_AS(submatrix(m, {0, 0}, {1}), std::invalid_argument);
}
