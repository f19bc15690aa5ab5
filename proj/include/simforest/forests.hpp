#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "simforest/complex.hpp"
#include "simforest/exact_linalg.hpp"
#include "simforest/int_polynomial.hpp"

namespace simforest {

// A set of faces of one grade, identified by their positions in the
// lexicographic face list of that grade.  Members are sorted and unique.
struct FaceSubset {
  int grade = 0;
  std::vector<int> members;

  static FaceSubset of(int grade, std::vector<int> members);
  std::size_t size() const { return members.size(); }
  bool operator==(const FaceSubset&) const = default;
};

// A forest F of top-dimensional faces together with a root R of ridges.
// The pair satisfies |F| + |R| = ridge_count and the square boundary
// submatrix on (non-root ridges) x (forest facets) is nonsingular; weight
// is the absolute value of its determinant (the order of the relative
// homology group in degree d-1).
struct RootedForest {
  FaceSubset facets;  // grade d
  FaceSubset root;    // grade d-1
  BigInt weight;
};

// Indeterminate values for the weighted identities, keyed by face position:
// ridge_x drives the root variables, facet_y the per-facet weights, and
// pair_w the per-incidence weights of the general weighting.
struct WeightAssignment {
  std::map<int, BigInt> ridge_x;
  std::map<int, BigInt> facet_y;
  std::map<std::pair<int, int>, BigInt> pair_w;  // (ridge, facet)
};

enum class WeightMode { FacetY, GeneralW };

// Enumeration size guard.  Complexes beyond these bounds are refused (the
// enumeration is exponential by nature); callers may raise the caps
// explicitly.
struct EnumerationLimits {
  std::size_t max_facets = 20;
  std::size_t max_ridges = 20;
};

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laplacian of the top boundary: D * D^T, indexed by ridges.
IntMatrix laplacian(const Complex& g);

// FacetY: D * diag(y) * D^T (y keyed by facet).  GeneralW: Dw * D^T where
// Dw multiplies every incident (ridge, facet) entry by its pair weight.
// Missing keys raise std::invalid_argument.
IntMatrix weighted_laplacian(const Complex& g, const WeightAssignment& w,
                             WeightMode mode);

// F (grade d): columns of the top boundary indexed by F are independent.
bool is_forest(const Complex& g, const FaceSubset& f);
// Forest columns reach the rank of the whole top boundary.
bool is_spanning(const Complex& g, const FaceSubset& f);

// R (grade d-1); both predicates constrain the rows NOT in R.
bool is_relatively_free(const Complex& g, const FaceSubset& r);        // max rank
bool is_relatively_generating(const Complex& g, const FaceSubset& r);  // independent
bool is_root(const Complex& g, const FaceSubset& r);

// (F, R) with |F| = #non-root ridges and nonsingular boundary submatrix.
bool is_rooted_forest(const Complex& g, const FaceSubset& f, const FaceSubset& r);

// |det| of the rooted pair's boundary submatrix (>= 1); the order of the
// relative homology group.  Throws std::invalid_argument when (f, r) is not
// a rooted forest.
BigInt homology_weight(const Complex& g, const FaceSubset& f, const FaceSubset& r);

// Invariant factors of the boundary submatrix; refines homology_weight
// (their product) into the cyclic structure of the group.
SmithForm homology_structure(const Complex& g, const FaceSubset& f,
                             const FaceSubset& r);

// Visits every rooted forest exactly once, in a deterministic order:
// forests by lexicographic backtracking over facet indices; for each forest,
// roots as complements of row bases of the forest's boundary columns, found
// by lexicographic backtracking over ridge indices.
void for_each_rooted_forest(const Complex& g, const EnumerationLimits& limits,
                            const std::function<void(const RootedForest&)>& visit);

std::vector<RootedForest> enumerate_rooted_forests(
    const Complex& g, const EnumerationLimits& limits = {});

// All roots of the complex itself, in the same deterministic order.
std::vector<FaceSubset> enumerate_roots(const Complex& g,
                                        const EnumerationLimits& limits = {});

// Sum over rooted forests of weight^2 * x^|R|.  Monic of degree ridge_count;
// equals char_poly_shifted(laplacian(g)).
IntPolynomial rooted_forest_polynomial(const Complex& g,
                                       const EnumerationLimits& limits = {});

// Both sides of an identity computed independently: `enumerated` by summing
// over combinatorial objects, `determinant` by exact linear algebra.
struct WeightedSumCheck {
  BigInt enumerated;
  BigInt determinant;
  bool matches() const { return enumerated == determinant; }
};

// Weighted identity at an integer point: sum over rooted forests of
// weight^2 * prod_{r in R} x_r * prod_{f in F} y_f  versus
// det(D * diag(y) * D^T + diag(x)).  Requires x for every ridge and y for
// every facet.
WeightedSumCheck weighted_rooted_forest_sum(const Complex& g,
                                            const WeightAssignment& w,
                                            const EnumerationLimits& limits = {});

// Determinantal side of the rooted matrix-forest identity: the Laplacian
// with root rows/columns deleted.  Throws std::invalid_argument when r is
// not a root of g.  Equals the sum of weight^2 over spanning forests rooted
// at r.
BigInt matrix_tree_rhs(const Complex& g, const FaceSubset& r);

// --- shared helpers -------------------------------------------------------

// Sorted complement of `subset` within {0..universe-1}.
std::vector<int> complement_within(const std::vector<int>& subset, int universe);

// Validates that s is a sorted duplicate-free subset of the given grade.
void validate_face_subset(const Complex& g, const FaceSubset& s, int expected_grade);

}  // namespace simforest
