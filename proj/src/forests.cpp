#include "simforest/forests.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "simforest/exact_linalg.hpp"

namespace simforest {

namespace {

// Incremental linear-independence tracker over exact integers.  Rows are
// pushed one at a time and reduced (fraction-free cross-multiplication)
// against the staircase collected so far; stored rows never change, so
// popping simply discards the newest row.  Each reduced row is divided by
// its content to keep entries small; scaling does not affect independence.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t width) : width_(width) {}

  std::size_t size() const { return rows_.size(); }

  // Returns false (and leaves the state unchanged) when the candidate is a
  // linear combination of the rows already pushed.
  bool try_push(std::vector<BigInt> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      // copy: the loop below overwrites row[pivot_cols_[i]]
      const BigInt lead = row[pivot_cols_[i]];
      if (lead == 0) continue;
      const BigInt& pv = rows_[i][pivot_cols_[i]];
      for (std::size_t j = 0; j < width_; ++j)
        row[j] = row[j] * pv - rows_[i][j] * lead;
      normalize(row);
    }
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == width_) return false;
    pivot_cols_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivot_cols_.pop_back();
  }

 private:
  static void normalize(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const BigInt& v : row) {
      if (v == 0) continue;
      g = boost::multiprecision::gcd(g, abs_of(v));
      if (g == 1) return;
    }
    if (g <= 1) return;
    for (BigInt& v : row) v /= g;
  }

  std::size_t width_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

std::vector<BigInt> matrix_row(const IntMatrix& m, std::size_t r) {
  std::vector<BigInt> row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
  return row;
}

std::vector<BigInt> matrix_col(const IntMatrix& m, std::size_t c) {
  std::vector<BigInt> col(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
  return col;
}

void check_caps(const Complex& g, const EnumerationLimits& limits) {
  if (g.facet_count() > limits.max_facets ||
      g.ridge_count() > limits.max_ridges) {
    std::ostringstream os;
    os << "enumeration refused: complex has " << g.facet_count()
       << " top faces and " << g.ridge_count() << " ridges, caps are "
       << limits.max_facets << " and " << limits.max_ridges
       << " (raise the caps to proceed)";
    throw CapExceededError(os.str());
  }
}

const BigInt& weight_at(const std::map<int, BigInt>& m, int key,
                        const char* what) {
  const auto it = m.find(key);
  if (it == m.end())
    throw std::invalid_argument(std::string("missing weight for ") + what +
                                " index " + std::to_string(key));
  return it->second;
}

const BigInt& pair_weight_at(const std::map<std::pair<int, int>, BigInt>& m,
                             int ridge, int facet) {
  const auto it = m.find({ridge, facet});
  if (it == m.end())
    throw std::invalid_argument("missing weight for incident pair (ridge " +
                                std::to_string(ridge) + ", facet " +
                                std::to_string(facet) + ")");
  return it->second;
}

}  // namespace

FaceSubset FaceSubset::of(int grade, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("face subset: duplicate member");
  return FaceSubset{grade, std::move(members)};
}

std::vector<int> complement_within(const std::vector<int>& subset, int universe) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(universe) - subset.size());
  std::size_t p = 0;
  for (int i = 0; i < universe; ++i) {
    if (p < subset.size() && subset[p] == i)
      ++p;
    else
      out.push_back(i);
  }
  return out;
}

void validate_face_subset(const Complex& g, const FaceSubset& s,
                          int expected_grade) {
  if (s.grade != expected_grade)
    throw std::invalid_argument("face subset: expected grade " +
                                std::to_string(expected_grade) + ", got " +
                                std::to_string(s.grade));
  const auto count = static_cast<int>(g.face_count(expected_grade));
  int prev = -1;
  for (int m : s.members) {
    if (m <= prev)
      throw std::invalid_argument("face subset: members must be sorted and unique");
    if (m < 0 || m >= count)
      throw std::out_of_range("face subset: member index out of range");
    prev = m;
  }
}

IntMatrix laplacian(const Complex& g) {
  const IntMatrix d = g.boundary_matrix(g.dimension());
  return d * d.transposed();
}

IntMatrix weighted_laplacian(const Complex& g, const WeightAssignment& w,
                             WeightMode mode) {
  IntMatrix d = g.boundary_matrix(g.dimension());
  IntMatrix scaled = d;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    if (mode == WeightMode::FacetY) {
      const BigInt& y = weight_at(w.facet_y, static_cast<int>(c), "facet");
      for (std::size_t r = 0; r < d.rows(); ++r)
        if (d(r, c) != 0) scaled(r, c) = d(r, c) * y;
    } else {
      for (std::size_t r = 0; r < d.rows(); ++r)
        if (d(r, c) != 0)
          scaled(r, c) =
              d(r, c) * pair_weight_at(w.pair_w, static_cast<int>(r),
                                       static_cast<int>(c));
    }
  }
  return scaled * d.transposed();
}

bool is_forest(const Complex& g, const FaceSubset& f) {
  validate_face_subset(g, f, g.dimension());
  const IntMatrix d = g.boundary_matrix(g.dimension());
  std::vector<int> all_rows(d.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const IntMatrix cols = submatrix(d, all_rows, f.members);
  return rank(cols) == static_cast<int>(f.size());
}

bool is_spanning(const Complex& g, const FaceSubset& f) {
  validate_face_subset(g, f, g.dimension());
  const IntMatrix d = g.boundary_matrix(g.dimension());
  std::vector<int> all_rows(d.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const IntMatrix cols = submatrix(d, all_rows, f.members);
  return rank(cols) == rank(d);
}

namespace {
IntMatrix non_root_rows(const Complex& g, const FaceSubset& r) {
  const IntMatrix d = g.boundary_matrix(g.dimension());
  const std::vector<int> rows =
      complement_within(r.members, static_cast<int>(d.rows()));
  std::vector<int> all_cols(d.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  return submatrix(d, rows, all_cols);
}
}  // namespace

bool is_relatively_free(const Complex& g, const FaceSubset& r) {
  validate_face_subset(g, r, g.dimension() - 1);
  const IntMatrix sub = non_root_rows(g, r);
  return rank(sub) == rank(g.boundary_matrix(g.dimension()));
}

bool is_relatively_generating(const Complex& g, const FaceSubset& r) {
  validate_face_subset(g, r, g.dimension() - 1);
  const IntMatrix sub = non_root_rows(g, r);
  return rank(sub) == static_cast<int>(sub.rows());
}

bool is_root(const Complex& g, const FaceSubset& r) {
  validate_face_subset(g, r, g.dimension() - 1);
  const IntMatrix sub = non_root_rows(g, r);
  const int rk = rank(sub);
  return rk == static_cast<int>(sub.rows()) &&
         rk == rank(g.boundary_matrix(g.dimension()));
}

namespace {
// det of the boundary submatrix on (non-root ridges) x (forest facets);
// meaningful only when the shape is square.
BigInt rooted_pair_det(const Complex& g, const FaceSubset& f, const FaceSubset& r) {
  const IntMatrix d = g.boundary_matrix(g.dimension());
  const std::vector<int> rows =
      complement_within(r.members, static_cast<int>(d.rows()));
  return det(submatrix(d, rows, f.members));
}

void require_rooted(const Complex& g, const FaceSubset& f, const FaceSubset& r,
                    BigInt* det_out) {
  validate_face_subset(g, f, g.dimension());
  validate_face_subset(g, r, g.dimension() - 1);
  const std::size_t non_root = g.ridge_count() - r.size();
  if (f.size() != non_root)
    throw std::invalid_argument(
        "not a rooted forest: forest size " + std::to_string(f.size()) +
        " does not match the " + std::to_string(non_root) +
        " non-root ridges (size mismatch)");
  BigInt dt = rooted_pair_det(g, f, r);
  if (dt == 0)
    throw std::invalid_argument(
        "not a rooted forest: boundary submatrix is singular");
  if (det_out) *det_out = std::move(dt);
}
}  // namespace

bool is_rooted_forest(const Complex& g, const FaceSubset& f, const FaceSubset& r) {
  validate_face_subset(g, f, g.dimension());
  validate_face_subset(g, r, g.dimension() - 1);
  if (f.size() != g.ridge_count() - r.size()) return false;
  return rooted_pair_det(g, f, r) != 0;
}

BigInt homology_weight(const Complex& g, const FaceSubset& f, const FaceSubset& r) {
  BigInt dt;
  require_rooted(g, f, r, &dt);
  return abs_of(dt);
}

SmithForm homology_structure(const Complex& g, const FaceSubset& f,
                             const FaceSubset& r) {
  require_rooted(g, f, r, nullptr);
  const IntMatrix d = g.boundary_matrix(g.dimension());
  const std::vector<int> rows =
      complement_within(r.members, static_cast<int>(d.rows()));
  return smith_normal_form(submatrix(d, rows, f.members));
}

void for_each_rooted_forest(const Complex& g, const EnumerationLimits& limits,
                            const std::function<void(const RootedForest&)>& visit) {
  check_caps(g, limits);
  const int dim = g.dimension();
  const IntMatrix d = g.boundary_matrix(dim);
  const auto n_ridges = d.rows();
  const auto n_facets = d.cols();

  std::vector<std::vector<BigInt>> columns(n_facets);
  for (std::size_t c = 0; c < n_facets; ++c) columns[c] = matrix_col(d, c);

  std::vector<int> forest;
  SpanTracker col_span(n_ridges);

  // Inner enumeration: row bases of the current forest's boundary columns.
  auto emit_roots = [&]() {
    const std::size_t k = forest.size();
    std::vector<std::vector<BigInt>> projected(n_ridges);
    std::vector<bool> usable(n_ridges, false);
    for (std::size_t r = 0; r < n_ridges; ++r) {
      std::vector<BigInt> row(k);
      bool nonzero = false;
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = d(r, static_cast<std::size_t>(forest[j]));
        nonzero = nonzero || row[j] != 0;
      }
      projected[r] = std::move(row);
      usable[r] = nonzero;
    }

    SpanTracker row_span(k);
    std::vector<int> base;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (base.size() == k) {
        RootedForest rf;
        rf.facets = FaceSubset{dim, forest};
        rf.root = FaceSubset{dim - 1,
                             complement_within(base, static_cast<int>(n_ridges))};
        rf.weight = abs_of(det(submatrix(d, base, forest)));
        visit(rf);
        return;
      }
      const std::size_t needed = k - base.size();
      for (std::size_t r = start; r + needed <= n_ridges; ++r) {
        if (!usable[r]) continue;
        if (!row_span.try_push(projected[r])) continue;
        base.push_back(static_cast<int>(r));
        self(self, r + 1);
        base.pop_back();
        row_span.pop();
      }
    };
    rec(rec, 0);
  };

  auto rec_forest = [&](auto&& self, std::size_t start) -> void {
    emit_roots();
    for (std::size_t c = start; c < n_facets; ++c) {
      if (!col_span.try_push(columns[c])) continue;
      forest.push_back(static_cast<int>(c));
      self(self, c + 1);
      forest.pop_back();
      col_span.pop();
    }
  };
  rec_forest(rec_forest, 0);
}

std::vector<RootedForest> enumerate_rooted_forests(const Complex& g,
                                                   const EnumerationLimits& limits) {
  std::vector<RootedForest> out;
  for_each_rooted_forest(g, limits,
                         [&](const RootedForest& rf) { out.push_back(rf); });
  return out;
}

std::vector<FaceSubset> enumerate_roots(const Complex& g,
                                        const EnumerationLimits& limits) {
  check_caps(g, limits);
  const IntMatrix d = g.boundary_matrix(g.dimension());
  const auto n_ridges = d.rows();
  const auto target = static_cast<std::size_t>(rank(d));

  std::vector<std::vector<BigInt>> rows(n_ridges);
  for (std::size_t r = 0; r < n_ridges; ++r) rows[r] = matrix_row(d, r);

  std::vector<FaceSubset> out;
  SpanTracker span(d.cols());
  std::vector<int> base;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (base.size() == target) {
      out.push_back(FaceSubset{
          g.dimension() - 1,
          complement_within(base, static_cast<int>(n_ridges))});
      return;
    }
    const std::size_t needed = target - base.size();
    for (std::size_t r = start; r + needed <= n_ridges; ++r) {
      if (!span.try_push(rows[r])) continue;
      base.push_back(static_cast<int>(r));
      self(self, r + 1);
      base.pop_back();
      span.pop();
    }
  };
  rec(rec, 0);
  return out;
}

IntPolynomial rooted_forest_polynomial(const Complex& g,
                                       const EnumerationLimits& limits) {
  std::vector<BigInt> coeffs(g.ridge_count() + 1);
  for_each_rooted_forest(g, limits, [&](const RootedForest& rf) {
    coeffs[rf.root.size()] += rf.weight * rf.weight;
  });
  return IntPolynomial(std::move(coeffs));
}

WeightedSumCheck weighted_rooted_forest_sum(const Complex& g,
                                            const WeightAssignment& w,
                                            const EnumerationLimits& limits) {
  const auto n_ridges = g.ridge_count();
  const auto n_facets = g.facet_count();
  std::vector<BigInt> x(n_ridges), y(n_facets);
  for (std::size_t r = 0; r < n_ridges; ++r)
    x[r] = weight_at(w.ridge_x, static_cast<int>(r), "ridge");
  for (std::size_t f = 0; f < n_facets; ++f)
    y[f] = weight_at(w.facet_y, static_cast<int>(f), "facet");

  BigInt lhs = 0;
  for_each_rooted_forest(g, limits, [&](const RootedForest& rf) {
    BigInt term = rf.weight * rf.weight;
    for (int r : rf.root.members) term *= x[static_cast<std::size_t>(r)];
    for (int f : rf.facets.members) term *= y[static_cast<std::size_t>(f)];
    lhs += term;
  });

  const IntMatrix lap = weighted_laplacian(g, w, WeightMode::FacetY);
  const BigInt rhs = det(lap.plus_diagonal(x));
  return WeightedSumCheck{std::move(lhs), rhs};
}

BigInt matrix_tree_rhs(const Complex& g, const FaceSubset& r) {
  if (!is_root(g, r))
    throw std::invalid_argument(
        "matrix_tree_rhs: the given ridge set is not a root of the complex");
  const IntMatrix lap = laplacian(g);
  const std::vector<int> keep =
      complement_within(r.members, static_cast<int>(lap.rows()));
  return det(submatrix(lap, keep, keep));
}

}  // namespace simforest
