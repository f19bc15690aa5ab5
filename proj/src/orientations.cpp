#include "simforest/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "simforest/exact_linalg.hpp"

namespace simforest {

namespace {

// Sign of the permutation perm (a bijection on {0..n-1}) by inversion count.
int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void check_permutation(const std::vector<int>& order, std::size_t n,
                       const char* what) {
  if (order.size() != n)
    throw std::invalid_argument(std::string(what) + ": wrong length");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n ||
        seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(what) +
                                  ": not a permutation of positions");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Positions (into `facets`) of each assigned facet; validates that phi is a
// fitting bijection onto `facets` with nonzero boundary entries.
std::vector<int> fitting_positions(const IntMatrix& d,
                                   const std::vector<int>& facets,
                                   const std::vector<int>& non_root,
                                   const FittingOrientation& phi) {
  if (phi.assigned_facet.size() != non_root.size())
    throw std::invalid_argument(
        "fitting orientation: assignment length does not match the non-root ridges");
  std::vector<int> pos(non_root.size());
  std::vector<bool> used(facets.size(), false);
  for (std::size_t i = 0; i < non_root.size(); ++i) {
    const int f = phi.assigned_facet[i];
    const auto it = std::lower_bound(facets.begin(), facets.end(), f);
    if (it == facets.end() || *it != f)
      throw std::invalid_argument(
          "fitting orientation: assigned facet is not in the forest");
    const auto p = static_cast<std::size_t>(it - facets.begin());
    if (used[p])
      throw std::invalid_argument(
          "fitting orientation: a facet is assigned to two ridges");
    used[p] = true;
    pos[i] = static_cast<int>(p);
    if (d(static_cast<std::size_t>(non_root[i]), static_cast<std::size_t>(f)) == 0)
      throw std::invalid_argument(
          "fitting orientation: ridge is not incident to its assigned facet");
  }
  return pos;
}

BigInt lambda_from_positions(const IntMatrix& d, const std::vector<int>& facets,
                             const std::vector<int>& non_root,
                             const std::vector<int>& pos) {
  BigInt product = permutation_sign(pos);
  for (std::size_t i = 0; i < non_root.size(); ++i)
    product *= d(static_cast<std::size_t>(non_root[i]),
                 static_cast<std::size_t>(facets[static_cast<std::size_t>(pos[i])]));
  return product;
}

struct PairData {
  IntMatrix d;             // top boundary
  std::vector<int> facets;
  std::vector<int> non_root;
};

PairData pair_data(const Complex& g, const FaceSubset& f, const FaceSubset& r,
                   bool require_square) {
  validate_face_subset(g, f, g.dimension());
  validate_face_subset(g, r, g.dimension() - 1);
  PairData pd{g.boundary_matrix(g.dimension()), f.members, {}};
  pd.non_root = complement_within(r.members, static_cast<int>(pd.d.rows()));
  if (require_square && pd.facets.size() != pd.non_root.size())
    throw std::invalid_argument(
        "orientation: forest size " + std::to_string(pd.facets.size()) +
        " does not match the " + std::to_string(pd.non_root.size()) +
        " non-root ridges");
  return pd;
}

}  // namespace

std::size_t StripDecomposition::oriented_strip_count() const {
  std::size_t n = 0;
  for (const StripCycle& c : cycles) n += c.oriented ? 1 : 0;
  return n;
}

OrientationAnalysis analyze_orientations(const IntMatrix& top_boundary,
                                         const std::vector<int>& facets,
                                         const std::vector<int>& non_root_ridges) {
  const std::size_t k = facets.size();
  if (non_root_ridges.size() != k)
    throw std::invalid_argument("analyze_orientations: sizes differ");

  OrientationAnalysis out;
  out.subdeterminant = det(submatrix(top_boundary, non_root_ridges, facets));

  // Candidate facet positions per ridge position (ascending, so the
  // generated assignment vectors come out in lexicographic order).
  std::vector<std::vector<int>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 0; p < k; ++p)
      if (top_boundary(static_cast<std::size_t>(non_root_ridges[i]),
                       static_cast<std::size_t>(facets[p])) != 0)
        candidates[i].push_back(static_cast<int>(p));

  std::vector<int> pos(k, -1);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      FittingOrientation phi;
      phi.assigned_facet.resize(k);
      for (std::size_t t = 0; t < k; ++t)
        phi.assigned_facet[t] = facets[static_cast<std::size_t>(pos[t])];
      out.lambdas.push_back(
          lambda_from_positions(top_boundary, facets, non_root_ridges, pos));
      out.orientations.push_back(std::move(phi));
      return;
    }
    for (int p : candidates[i]) {
      if (used[static_cast<std::size_t>(p)]) continue;
      used[static_cast<std::size_t>(p)] = true;
      pos[i] = p;
      self(self, i + 1);
      used[static_cast<std::size_t>(p)] = false;
    }
  };
  rec(rec, 0);

  if (out.subdeterminant != 0) {
    const int s = sign_of(out.subdeterminant);
    out.signs.reserve(out.lambdas.size());
    for (const BigInt& l : out.lambdas) out.signs.push_back(s * l);
  }
  return out;
}

std::vector<FittingOrientation> enumerate_fitting_orientations(
    const Complex& g, const FaceSubset& f, const FaceSubset& r) {
  const PairData pd = pair_data(g, f, r, /*require_square=*/true);
  return analyze_orientations(pd.d, pd.facets, pd.non_root).orientations;
}

BigInt orientation_sign(const Complex& g, const FaceSubset& f,
                        const FaceSubset& r, const FittingOrientation& phi) {
  const PairData pd = pair_data(g, f, r, true);
  const BigInt dt = det(submatrix(pd.d, pd.non_root, pd.facets));
  if (dt == 0)
    throw std::invalid_argument(
        "orientation_sign: the pair is not a rooted forest (singular submatrix)");
  const std::vector<int> pos = fitting_positions(pd.d, pd.facets, pd.non_root, phi);
  return sign_of(dt) * lambda_from_positions(pd.d, pd.facets, pd.non_root, pos);
}

BigInt orientation_sign_ordered(const Complex& g, const FaceSubset& f,
                                const FaceSubset& r, const FittingOrientation& phi,
                                const std::vector<int>& ridge_order,
                                const std::vector<int>& facet_order) {
  const PairData pd = pair_data(g, f, r, true);
  const std::size_t k = pd.facets.size();
  check_permutation(ridge_order, k, "ridge_order");
  check_permutation(facet_order, k, "facet_order");
  const std::vector<int> pos = fitting_positions(pd.d, pd.facets, pd.non_root, phi);

  // Reorder rows/columns, recompute the determinant sign and the
  // permutation sign in the new coordinates.
  std::vector<int> rows(k), cols(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i] = pd.non_root[static_cast<std::size_t>(ridge_order[i])];
    cols[i] = pd.facets[static_cast<std::size_t>(facet_order[i])];
  }
  const BigInt dt = det(submatrix(pd.d, rows, cols));
  if (dt == 0)
    throw std::invalid_argument(
        "orientation_sign_ordered: the pair is not a rooted forest");

  std::vector<int> facet_pos_in_order(k);
  for (std::size_t j = 0; j < k; ++j)
    facet_pos_in_order[static_cast<std::size_t>(facet_order[j])] =
        static_cast<int>(j);
  std::vector<int> perm(k);
  BigInt entries = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const int ridge_pos = ridge_order[i];
    const int p = pos[static_cast<std::size_t>(ridge_pos)];
    perm[i] = facet_pos_in_order[static_cast<std::size_t>(p)];
    entries *= pd.d(
        static_cast<std::size_t>(pd.non_root[static_cast<std::size_t>(ridge_pos)]),
        static_cast<std::size_t>(pd.facets[static_cast<std::size_t>(p)]));
  }
  return sign_of(dt) * permutation_sign(perm) * entries;
}

BigInt signed_orientation_sum(const Complex& g, const FaceSubset& f,
                              const FaceSubset& r) {
  const PairData pd = pair_data(g, f, r, true);
  const OrientationAnalysis a = analyze_orientations(pd.d, pd.facets, pd.non_root);
  if (a.subdeterminant == 0)
    throw std::invalid_argument(
        "signed_orientation_sum: the pair is not a rooted forest");
  BigInt sum = 0;
  for (const BigInt& s : a.signs) sum += s;
  return sum;
}

BigInt sum_lambda_unrooted(const Complex& g, const FaceSubset& f,
                           const FaceSubset& r) {
  const PairData pd = pair_data(g, f, r, true);
  const OrientationAnalysis a = analyze_orientations(pd.d, pd.facets, pd.non_root);
  BigInt sum = 0;
  for (const BigInt& l : a.lambdas) sum += l;
  return sum;
}

StripDecomposition strip_decomposition_raw(const IntMatrix& top_boundary,
                                           const std::vector<int>& non_root_ridges,
                                           const FittingOrientation& phi,
                                           const FittingOrientation& phi_prime) {
  const std::size_t k = non_root_ridges.size();

  // Transition permutation on ridge positions: follow phi' forward, then
  // phi backward.  facet_owner inverts phi.
  std::vector<std::pair<int, int>> owner;  // (facet, position) sorted
  owner.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    owner.emplace_back(phi.assigned_facet[i], static_cast<int>(i));
  std::sort(owner.begin(), owner.end());

  auto position_of = [&](int facet) {
    const auto it = std::lower_bound(owner.begin(), owner.end(),
                                     std::make_pair(facet, -1));
    return static_cast<std::size_t>(it->second);
  };

  StripDecomposition out;
  std::vector<bool> visited(k, false);
  for (std::size_t start = 0; start < k; ++start) {
    if (visited[start]) continue;
    if (phi_prime.assigned_facet[start] == phi.assigned_facet[start]) {
      visited[start] = true;
      out.fixed_points.push_back(non_root_ridges[start]);
      continue;
    }
    StripCycle cycle;
    std::size_t i = start;
    BigInt product = 1;
    do {
      visited[i] = true;
      const int facet = phi_prime.assigned_facet[i];
      const std::size_t next = position_of(facet);
      cycle.ridges.push_back(non_root_ridges[i]);
      cycle.facets.push_back(facet);
      product *= top_boundary(static_cast<std::size_t>(non_root_ridges[i]),
                              static_cast<std::size_t>(facet)) *
                 top_boundary(static_cast<std::size_t>(non_root_ridges[next]),
                              static_cast<std::size_t>(facet));
      i = next;
    } while (i != start);
    const int target = cycle.ridges.size() % 2 == 0 ? 1 : -1;  // (-1)^length
    cycle.oriented = sign_of(product) == target;
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

StripDecomposition strip_decomposition(const Complex& g, const FaceSubset& f,
                                       const FaceSubset& r,
                                       const FittingOrientation& phi,
                                       const FittingOrientation& phi_prime) {
  const PairData pd = pair_data(g, f, r, true);
  fitting_positions(pd.d, pd.facets, pd.non_root, phi);
  fitting_positions(pd.d, pd.facets, pd.non_root, phi_prime);
  return strip_decomposition_raw(pd.d, pd.non_root, phi, phi_prime);
}

BidirectedPolynomials bidirected_polynomials(const Complex& g,
                                             const EnumerationLimits& limits) {
  const IntMatrix d = g.boundary_matrix(g.dimension());
  std::vector<BigInt> via_signs(g.ridge_count() + 1);
  std::vector<BigInt> via_strips(g.ridge_count() + 1);

  for_each_rooted_forest(g, limits, [&](const RootedForest& rf) {
    const std::vector<int> non_root = complement_within(
        rf.root.members, static_cast<int>(g.ridge_count()));
    const OrientationAnalysis a =
        analyze_orientations(d, rf.facets.members, non_root);

    BigInt sign_sum = 0;
    for (const BigInt& s : a.signs) sign_sum += s;
    via_signs[rf.root.size()] += sign_sum * sign_sum;

    for (std::size_t i = 0; i < a.orientations.size(); ++i) {
      const BigInt mag_i = abs_of(a.lambdas[i]);
      for (std::size_t j = 0; j < a.orientations.size(); ++j) {
        const StripDecomposition sd = strip_decomposition_raw(
            d, non_root, a.orientations[i], a.orientations[j]);
        const BigInt magnitude = mag_i * abs_of(a.lambdas[j]);
        if (sd.oriented_strip_count() % 2 == 0)
          via_strips[rf.root.size()] += magnitude;
        else
          via_strips[rf.root.size()] -= magnitude;
      }
    }
  });
  return BidirectedPolynomials{IntPolynomial(std::move(via_signs)),
                               IntPolynomial(std::move(via_strips))};
}

WeightedSumCheck weighted_bidirected_sum(const Complex& g,
                                         const WeightAssignment& w,
                                         const EnumerationLimits& limits) {
  const IntMatrix d = g.boundary_matrix(g.dimension());
  const auto n_ridges = g.ridge_count();

  std::vector<BigInt> x(n_ridges);
  for (std::size_t r = 0; r < n_ridges; ++r) {
    const auto it = w.ridge_x.find(static_cast<int>(r));
    if (it == w.ridge_x.end())
      throw std::invalid_argument("missing weight for ridge index " +
                                  std::to_string(r));
    x[r] = it->second;
  }
  auto pair_w = [&](int ridge, int facet) -> const BigInt& {
    const auto it = w.pair_w.find({ridge, facet});
    if (it == w.pair_w.end())
      throw std::invalid_argument("missing weight for incident pair (ridge " +
                                  std::to_string(ridge) + ", facet " +
                                  std::to_string(facet) + ")");
    return it->second;
  };

  BigInt lhs = 0;
  for_each_rooted_forest(g, limits, [&](const RootedForest& rf) {
    const std::vector<int> non_root =
        complement_within(rf.root.members, static_cast<int>(n_ridges));
    const OrientationAnalysis a =
        analyze_orientations(d, rf.facets.members, non_root);

    // The pair weight rides on the first orientation only, so the double
    // sum factorizes into (weighted sum) * (plain sum).
    BigInt weighted_sum = 0, plain_sum = 0;
    for (std::size_t i = 0; i < a.orientations.size(); ++i) {
      BigInt wprod = 1;
      for (std::size_t t = 0; t < non_root.size(); ++t)
        wprod *= pair_w(non_root[t], a.orientations[i].assigned_facet[t]);
      weighted_sum += a.signs[i] * wprod;
      plain_sum += a.signs[i];
    }
    BigInt term = weighted_sum * plain_sum;
    for (int rr : rf.root.members) term *= x[static_cast<std::size_t>(rr)];
    lhs += term;
  });

  const IntMatrix lap = weighted_laplacian(g, w, WeightMode::GeneralW);
  const BigInt rhs = det(lap.plus_diagonal(x));
  return WeightedSumCheck{std::move(lhs), rhs};
}

}  // namespace simforest
