#include "simforest/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "simforest/exact_linalg.hpp"
#include "simforest/orientations.hpp"

namespace simforest {

namespace {

std::string subset_text(const std::vector<int>& members) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < members.size(); ++i)
    os << (i ? "," : "") << members[i];
  os << "]";
  return os.str();
}

std::string pair_text(const RootedForest& rf) {
  return "forest " + subset_text(rf.facets.members) + ", root " +
         subset_text(rf.root.members);
}

WeightAssignment seeded_weights(const IntMatrix& d, SplitMix64& rng) {
  WeightAssignment w;
  for (std::size_t r = 0; r < d.rows(); ++r)
    w.ridge_x[static_cast<int>(r)] = rng.next_int(1, 5);
  for (std::size_t f = 0; f < d.cols(); ++f)
    w.facet_y[static_cast<int>(f)] = rng.next_int(1, 5);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t f = 0; f < d.cols(); ++f)
      if (d(r, f) != 0)
        w.pair_w[{static_cast<int>(r), static_cast<int>(f)}] = rng.next_int(1, 5);
  return w;
}

// Distinct sorted sample of `k` values from {0..n-1}.
std::vector<int> sample_subset(SplitMix64& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.next_below(
                          static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

struct Check {
  std::string name;
  bool pass = true;
  std::string ok_detail;
  std::string failure;

  void require(bool condition, const std::string& counterexample) {
    if (pass && !condition) {
      pass = false;
      failure = counterexample;
    }
  }

  IdentityReport report() const {
    return IdentityReport{name, pass, pass ? ok_detail : failure};
  }
};

std::string poly_mismatch(const IntPolynomial& got, const IntPolynomial& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

}  // namespace

WeightAssignment seeded_weight_assignment(const Complex& g, SplitMix64& rng) {
  return seeded_weights(g.boundary_matrix(g.dimension()), rng);
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.pass; });
}

std::vector<IdentityReport> verify_identities(const Complex& g,
                                              const VerifyOptions& options) {
  const int dim = g.dimension();
  const IntMatrix d = g.boundary_matrix(dim);
  const auto n_ridges = d.rows();
  const auto n_facets = d.cols();
  const IntPolynomial reference = char_poly_shifted(laplacian(g));
  const int top_rank = rank(d);

  // Seeded integer points for the weighted identities.
  SplitMix64 rng(options.seed);
  std::vector<WeightAssignment> points;
  if (options.extended)
    for (int p = 0; p < options.weighted_points; ++p)
      points.push_back(seeded_weights(d, rng));

  // Accumulators filled by a single sweep over all rooted forests.
  std::vector<BigInt> forest_poly(n_ridges + 1);
  std::vector<BigInt> sign_route(n_ridges + 1);
  std::vector<BigInt> strip_route(n_ridges + 1);
  std::vector<BigInt> weighted_forest_lhs(points.size());
  std::vector<BigInt> weighted_bidirected_lhs(points.size());
  std::map<std::vector<int>, BigInt> spanning_by_root;

  Check signed_sum_check{"orientation_signed_sum_equals_weight"};
  Check count_check{"orientation_count_at_least_weight"};
  Check strip_law_check{"strip_parity_matches_sign_product"};
  std::size_t forest_count = 0;

  for_each_rooted_forest(g, options.limits, [&](const RootedForest& rf) {
    ++forest_count;
    const std::size_t root_size = rf.root.size();
    forest_poly[root_size] += rf.weight * rf.weight;

    const std::vector<int> non_root =
        complement_within(rf.root.members, static_cast<int>(n_ridges));
    const OrientationAnalysis a =
        analyze_orientations(d, rf.facets.members, non_root);

    BigInt sign_sum = 0;
    for (const BigInt& s : a.signs) sign_sum += s;
    signed_sum_check.require(sign_sum == rf.weight,
                             pair_text(rf) + ": signed sum " + sign_sum.str() +
                                 " != weight " + rf.weight.str());
    count_check.require(BigInt(a.orientations.size()) >= rf.weight,
                        pair_text(rf) + ": " +
                            std::to_string(a.orientations.size()) +
                            " orientations < weight " + rf.weight.str());
    sign_route[root_size] += sign_sum * sign_sum;

    for (std::size_t i = 0; i < a.orientations.size(); ++i) {
      for (std::size_t j = 0; j < a.orientations.size(); ++j) {
        const StripDecomposition sd = strip_decomposition_raw(
            d, non_root, a.orientations[i], a.orientations[j]);
        const BigInt magnitude = abs_of(a.lambdas[i]) * abs_of(a.lambdas[j]);
        const BigInt term = sd.oriented_strip_count() % 2 == 0
                                ? magnitude
                                : BigInt(-magnitude);
        strip_route[root_size] += term;
        const BigInt sign_product = a.signs[i] * a.signs[j];
        strip_law_check.require(
            sign_product == term,
            pair_text(rf) + ": orientation pair (" + std::to_string(i) + "," +
                std::to_string(j) + ") has sign product " + sign_product.str() +
                " but strip parity gives " + term.str());
      }
    }

    if (!points.empty()) {
      const BigInt w2 = rf.weight * rf.weight;
      for (std::size_t p = 0; p < points.size(); ++p) {
        const WeightAssignment& w = points[p];
        BigInt xprod = 1;
        for (int r : rf.root.members) xprod *= w.ridge_x.at(r);

        BigInt term = w2 * xprod;
        for (int f : rf.facets.members) term *= w.facet_y.at(f);
        weighted_forest_lhs[p] += term;

        BigInt weighted_sum = 0;
        for (std::size_t i = 0; i < a.orientations.size(); ++i) {
          BigInt wprod = 1;
          for (std::size_t t = 0; t < non_root.size(); ++t)
            wprod *= w.pair_w.at(
                {non_root[t], a.orientations[i].assigned_facet[t]});
          weighted_sum += a.signs[i] * wprod;
        }
        weighted_bidirected_lhs[p] += weighted_sum * sign_sum * xprod;
      }
    }

    if (options.extended &&
        static_cast<int>(rf.facets.size()) == top_rank)
      spanning_by_root[rf.root.members] += rf.weight * rf.weight;
  });

  std::vector<IdentityReport> reports;
  const std::string counted = std::to_string(forest_count) + " rooted forests";

  {
    Check c{"forest_polynomial_matches_char_poly"};
    const IntPolynomial lhs(std::move(forest_poly));
    c.ok_detail = counted + "; polynomial " + lhs.to_string();
    c.require(lhs == reference, poly_mismatch(lhs, reference));
    reports.push_back(c.report());
  }
  {
    Check c{"bidirected_sign_route_matches_char_poly"};
    const IntPolynomial lhs(std::move(sign_route));
    c.ok_detail = "ordered orientation pairs, sign products";
    c.require(lhs == reference, poly_mismatch(lhs, reference));
    reports.push_back(c.report());
  }
  {
    Check c{"bidirected_strip_route_matches_char_poly"};
    const IntPolynomial lhs(std::move(strip_route));
    c.ok_detail = "ordered orientation pairs, strip parities";
    c.require(lhs == reference, poly_mismatch(lhs, reference));
    reports.push_back(c.report());
  }
  signed_sum_check.ok_detail = counted;
  count_check.ok_detail = counted;
  strip_law_check.ok_detail = counted;
  reports.push_back(signed_sum_check.report());
  reports.push_back(count_check.report());
  reports.push_back(strip_law_check.report());

  if (options.extended) {
    {
      Check c{"weighted_forest_identity"};
      for (std::size_t p = 0; p < points.size(); ++p) {
        const IntMatrix lap = weighted_laplacian(g, points[p], WeightMode::FacetY);
        std::vector<BigInt> x(n_ridges);
        for (std::size_t r = 0; r < n_ridges; ++r)
          x[r] = points[p].ridge_x.at(static_cast<int>(r));
        const BigInt rhs = det(lap.plus_diagonal(x));
        c.require(weighted_forest_lhs[p] == rhs,
                  "point " + std::to_string(p) + ": enumerated " +
                      weighted_forest_lhs[p].str() + " != determinant " +
                      rhs.str());
      }
      c.ok_detail = std::to_string(points.size()) + " seeded points";
      reports.push_back(c.report());
    }
    {
      Check c{"weighted_bidirected_identity"};
      for (std::size_t p = 0; p < points.size(); ++p) {
        const IntMatrix lap =
            weighted_laplacian(g, points[p], WeightMode::GeneralW);
        std::vector<BigInt> x(n_ridges);
        for (std::size_t r = 0; r < n_ridges; ++r)
          x[r] = points[p].ridge_x.at(static_cast<int>(r));
        const BigInt rhs = det(lap.plus_diagonal(x));
        c.require(weighted_bidirected_lhs[p] == rhs,
                  "point " + std::to_string(p) + ": enumerated " +
                      weighted_bidirected_lhs[p].str() + " != determinant " +
                      rhs.str());
      }
      c.ok_detail = std::to_string(points.size()) + " seeded points";
      reports.push_back(c.report());
    }
    {
      Check c{"deleted_root_determinant_identity"};
      const std::vector<FaceSubset> roots = enumerate_roots(g, options.limits);
      const IntMatrix lap = laplacian(g);
      for (const FaceSubset& root : roots) {
        const std::vector<int> keep =
            complement_within(root.members, static_cast<int>(n_ridges));
        const BigInt rhs = det(submatrix(lap, keep, keep));
        const auto it = spanning_by_root.find(root.members);
        const BigInt lhs = it == spanning_by_root.end() ? BigInt(0) : it->second;
        c.require(lhs == rhs, "root " + subset_text(root.members) +
                                  ": spanning-forest sum " + lhs.str() +
                                  " != deleted-root determinant " + rhs.str());
      }
      c.ok_detail = std::to_string(roots.size()) + " roots";
      reports.push_back(c.report());
    }
    {
      Check c{"raw_signed_sum_vanishes_on_non_rooted_pairs"};
      SplitMix64 sampler(options.seed ^ 0x9e3779b97f4a7c15ULL);
      const int kmax = static_cast<int>(std::min(n_facets, n_ridges));
      int found = 0;
      const int max_attempts = options.annihilation_samples * 20;
      for (int attempt = 0;
           attempt < max_attempts && found < options.annihilation_samples;
           ++attempt) {
        const int k = kmax == 0 ? 0 : sampler.next_int(0, kmax);
        const std::vector<int> facets =
            sample_subset(sampler, static_cast<int>(n_facets), k);
        const std::vector<int> non_root =
            sample_subset(sampler, static_cast<int>(n_ridges), k);
        const OrientationAnalysis a = analyze_orientations(d, facets, non_root);
        if (a.subdeterminant != 0) continue;  // rooted pair: not a target
        ++found;
        BigInt sum = 0;
        for (const BigInt& l : a.lambdas) sum += l;
        c.require(sum == 0, "facets " + subset_text(facets) +
                                ", non-root ridges " + subset_text(non_root) +
                                ": raw signed sum " + sum.str() + " != 0");
      }
      c.ok_detail = std::to_string(found) + " sampled non-rooted pairs";
      reports.push_back(c.report());
    }
  }
  return reports;
}

}  // namespace simforest
