#include "simforest/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simforest {

namespace {

// All size-k subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

SimplicialComplex gen_complete(int n, int d) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("gen_complete: requires 1 <= d < n");
  return SimplicialComplex::from_facets(subsets_of_size(n, d + 1));
}

SimplicialComplex gen_simplex_boundary(int n) {
  if (n < 3) throw std::invalid_argument("gen_simplex_boundary: requires n >= 3");
  return SimplicialComplex::from_facets(subsets_of_size(n, n - 1));
}

SimplicialComplex gen_bipyramid() {
  // All triangles on {1..5} avoiding the edge {1,5}.
  return SimplicialComplex::from_facets({{1, 2, 3},
                                         {1, 2, 4},
                                         {1, 3, 4},
                                         {2, 3, 4},
                                         {2, 3, 5},
                                         {2, 4, 5},
                                         {3, 4, 5}});
}

SimplicialComplex gen_projective_plane_6() {
  return SimplicialComplex::from_facets({{1, 2, 3},
                                         {1, 3, 4},
                                         {1, 4, 5},
                                         {1, 5, 6},
                                         {1, 2, 6},
                                         {2, 3, 5},
                                         {3, 4, 6},
                                         {2, 4, 5},
                                         {3, 5, 6},
                                         {2, 4, 6}});
}

CellComplexData gen_hypercube(int n, int d) {
  if (n < 1 || d < 1 || d > n)
    throw std::invalid_argument("gen_hypercube: requires 1 <= d <= n");

  // Grade-k cells: words over {0,1,*} with exactly k stars, in
  // lexicographic string order ('*' < '0' < '1' in ASCII).
  std::vector<std::vector<std::string>> ids(d + 1);
  auto gen_words = [n](int stars) {
    std::vector<std::string> words;
    std::string w(static_cast<std::size_t>(n), '0');
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n) {
        if (left == 0) words.push_back(w);
        return;
      }
      if (n - pos < left) return;
      for (char c : {'*', '0', '1'}) {
        if (c == '*' && left == 0) continue;
        w[static_cast<std::size_t>(pos)] = c;
        self(self, pos + 1, left - (c == '*' ? 1 : 0));
      }
      w[static_cast<std::size_t>(pos)] = '0';
    };
    rec(rec, 0, stars);
    std::sort(words.begin(), words.end());
    return words;
  };
  for (int k = 0; k <= d; ++k) ids[static_cast<std::size_t>(k)] = gen_words(k);

  std::vector<IntMatrix> incidence;
  incidence.reserve(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    const auto& lower = ids[static_cast<std::size_t>(k - 1)];
    const auto& upper = ids[static_cast<std::size_t>(k)];
    IntMatrix m(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      const std::string& cell = upper[c];
      int star_rank = 0;  // index of the freed coordinate among the stars
      for (std::size_t pos = 0; pos < cell.size(); ++pos) {
        if (cell[pos] != '*') continue;
        const int orient = (star_rank % 2 == 0) ? 1 : -1;
        for (char fix : {'1', '0'}) {
          std::string sub = cell;
          sub[pos] = fix;
          const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
          const auto r = static_cast<std::size_t>(it - lower.begin());
          m(r, c) = (fix == '1') ? orient : -orient;
        }
        ++star_rank;
      }
    }
    incidence.push_back(std::move(m));
  }
  return CellComplexData(std::move(ids), std::move(incidence));
}

}  // namespace simforest
