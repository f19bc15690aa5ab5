#pragma once

#include <cstddef>
#include <vector>

#include "simforest/complex.hpp"
#include "simforest/forests.hpp"
#include "simforest/int_polynomial.hpp"

namespace simforest {

// A fitting orientation of a pair (F, R): a bijection from the non-root
// ridges onto the forest facets such that every ridge maps to a facet
// incident to it.  assigned_facet[i] is the facet index (into the complex's
// facet list) chosen for the i-th non-root ridge in ascending ridge order.
struct FittingOrientation {
  std::vector<int> assigned_facet;
  bool operator==(const FittingOrientation&) const = default;
};

// Comparison of two fitting orientations of the same pair: positions where
// they agree, plus the cycles of the transition permutation.  A cycle
// ridge_1 -> facet_1 -> ridge_2 -> ... alternates ridges and facets
// (facet_i joins ridge_i to ridge_{i+1}); it is tagged `oriented` when the
// sign of the product of boundary entries along it equals (-1)^length.
struct StripCycle {
  std::vector<int> ridges;  // ridge indices along the cycle
  std::vector<int> facets;  // facets[i] joins ridges[i] to ridges[i+1 mod n]
  bool oriented = false;
};

struct StripDecomposition {
  std::vector<int> fixed_points;  // ridge indices with equal assignment
  std::vector<StripCycle> cycles;
  std::size_t oriented_strip_count() const;
};

// All fitting orientations of (f, r), in lexicographic order of their
// assignment vectors.  Requires |f| = #non-root ridges; the pair need not
// be a rooted forest (a singular pair simply has orientations whose raw
// signed terms cancel).
std::vector<FittingOrientation> enumerate_fitting_orientations(
    const Complex& g, const FaceSubset& f, const FaceSubset& r);

// The intrinsic sign of a fitting orientation of a rooted forest: the
// permutation sign of the assignment combined with the product of its
// boundary entries, normalized by the sign of the boundary submatrix
// determinant so that the value does not depend on how rows/columns are
// ordered.  For complexes with entries in {-1,0,1} this is exactly +1 or
// -1; larger incidence entries fold their magnitude into the value.
// Requires (f, r) to be a rooted forest.
BigInt orientation_sign(const Complex& g, const FaceSubset& f,
                        const FaceSubset& r, const FittingOrientation& phi);

// Same, but with explicit orderings: permutations of the non-root ridge
// positions and of the forest facet positions.  The result is independent
// of the orderings; exposed so that invariance can be checked directly.
BigInt orientation_sign_ordered(const Complex& g, const FaceSubset& f,
                                const FaceSubset& r, const FittingOrientation& phi,
                                const std::vector<int>& ridge_order,
                                const std::vector<int>& facet_order);

// Sum of orientation_sign over all fitting orientations of a rooted
// forest; equals the homology weight.
BigInt signed_orientation_sum(const Complex& g, const FaceSubset& f,
                              const FaceSubset& r);

// Sum over fitting orientations of the *raw* signed terms (no determinant
// normalization), under lexicographic orderings.  This is precisely the
// permutation expansion of det(boundary submatrix): it vanishes whenever
// (f, r) is not a rooted forest.  Only |f| = #non-root ridges is required.
BigInt sum_lambda_unrooted(const Complex& g, const FaceSubset& f,
                           const FaceSubset& r);

// Strip decomposition of an ordered pair of fitting orientations of the
// same pair (f, r).  Validates both orientations.
StripDecomposition strip_decomposition(const Complex& g, const FaceSubset& f,
                                       const FaceSubset& r,
                                       const FittingOrientation& phi,
                                       const FittingOrientation& phi_prime);

// Generating polynomial of bi-directed forests (ordered pairs of fitting
// orientations of a rooted forest, weighted by the product of their signs,
// graded by root size), computed along two independent routes:
//   from_sign_products  - per-pair product of orientation signs,
//   from_strip_parities - (-1)^(#oriented strips) per pair, times the
//                         entry-magnitude product.
// Both must equal char_poly_shifted(laplacian(g)).
struct BidirectedPolynomials {
  IntPolynomial from_sign_products;
  IntPolynomial from_strip_parities;
};

BidirectedPolynomials bidirected_polynomials(const Complex& g,
                                             const EnumerationLimits& limits = {});

// Weighted bi-directed identity at an integer point: sum over rooted
// forests and ordered orientation pairs (phi, phi') of
//   sign(phi) * sign(phi') * prod_{non-root ridge r} w_{r, phi(r)}
//   * prod_{root ridge r} x_r
// versus det(Dw * D^T + diag(x)).  Requires x for every ridge and w for
// every incident (ridge, facet) pair.
WeightedSumCheck weighted_bidirected_sum(const Complex& g,
                                         const WeightAssignment& w,
                                         const EnumerationLimits& limits = {});

// --- bulk helpers ----------------------------------------------------------
// Low-level entry points on a precomputed top boundary matrix; used by the
// polynomial builders and the identity verifier, where the boundary matrix
// must not be rebuilt for every enumerated forest.  Index lists ascending.

struct OrientationAnalysis {
  BigInt subdeterminant;                        // det on (non-root) x (facets)
  std::vector<FittingOrientation> orientations; // lexicographic order
  std::vector<BigInt> lambdas;                  // raw signed term per orientation
  std::vector<BigInt> signs;                    // normalized; empty when singular
};

OrientationAnalysis analyze_orientations(const IntMatrix& top_boundary,
                                         const std::vector<int>& facets,
                                         const std::vector<int>& non_root_ridges);

StripDecomposition strip_decomposition_raw(const IntMatrix& top_boundary,
                                           const std::vector<int>& non_root_ridges,
                                           const FittingOrientation& phi,
                                           const FittingOrientation& phi_prime);

}  // namespace simforest
