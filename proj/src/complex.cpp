#include "simforest/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simforest {

std::string Face::label() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    os << (i ? "," : "") << vertices[i];
  os << "}";
  return os.str();
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::vector<int>> facets) {
  if (facets.empty())
    throw std::invalid_argument("simplicial complex: empty facet list");

  int dim = 0;
  std::vector<std::vector<int>> cleaned;
  cleaned.reserve(facets.size());
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.size() < 2)
      throw std::invalid_argument(
          "simplicial complex: facets must have at least two vertices");
    if (f.front() <= 0)
      throw std::invalid_argument(
          "simplicial complex: vertex labels must be positive");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument(
          "simplicial complex: duplicate vertex within a facet");
    dim = std::max(dim, static_cast<int>(f.size()) - 1);
    cleaned.push_back(std::move(f));
  }

  // Downward closure: every nonempty subset of every facet.
  std::vector<std::set<std::vector<int>>> closure(dim + 1);
  for (const auto& f : cleaned) {
    const std::size_t n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      closure[sub.size() - 1].insert(std::move(sub));
    }
  }

  SimplicialComplex out;
  out.dimension_ = dim;
  out.faces_by_dim_.resize(dim + 1);
  for (int k = 0; k <= dim; ++k)
    for (const auto& v : closure[k])
      out.faces_by_dim_[k].push_back(Face{v});  // std::set iterates in lex order

  // Maximal faces: not contained in any face one dimension up.
  for (int k = 0; k <= dim; ++k) {
    for (const Face& f : out.faces_by_dim_[k]) {
      bool covered = false;
      if (k < dim) {
        for (const Face& g : out.faces_by_dim_[k + 1]) {
          if (std::includes(g.vertices.begin(), g.vertices.end(),
                            f.vertices.begin(), f.vertices.end())) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) out.maximal_faces_.push_back(f);
    }
  }
  std::sort(out.maximal_faces_.begin(), out.maximal_faces_.end());
  return out;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  if (k < 0 || k > dimension_)
    throw std::out_of_range("SimplicialComplex::faces: grade out of range");
  return faces_by_dim_[static_cast<std::size_t>(k)];
}

IntMatrix SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > dimension_)
    throw std::out_of_range("boundary_matrix: grade must be in [1, dimension]");
  const auto& lower = faces(k - 1);
  const auto& upper = faces(k);
  IntMatrix d(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const std::vector<int>& v = upper[c].vertices;
    for (std::size_t j = 0; j < v.size(); ++j) {
      Face sub;
      sub.vertices.reserve(v.size() - 1);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (i != j) sub.vertices.push_back(v[i]);
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      const auto r = static_cast<std::size_t>(it - lower.begin());
      d(r, c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

CellComplexData::CellComplexData(
    std::vector<std::vector<std::string>> face_ids_by_dim,
    std::vector<IntMatrix> incidence_by_dim)
    : face_ids_(std::move(face_ids_by_dim)), incidence_(std::move(incidence_by_dim)) {
  if (face_ids_.size() < 2)
    throw std::invalid_argument("cell complex: dimension must be at least 1");
  if (incidence_.size() + 1 != face_ids_.size())
    throw std::invalid_argument(
        "cell complex: need one incidence matrix per grade 1..dimension");
  for (std::size_t k = 1; k < face_ids_.size(); ++k) {
    const IntMatrix& d = incidence_[k - 1];
    if (d.rows() != face_ids_[k - 1].size() || d.cols() != face_ids_[k].size())
      throw std::invalid_argument(
          "cell complex: incidence shape does not match face counts");
  }
  for (std::size_t k = 0; k < face_ids_.size(); ++k) {
    std::set<std::string> seen(face_ids_[k].begin(), face_ids_[k].end());
    if (seen.size() != face_ids_[k].size())
      throw std::invalid_argument("cell complex: duplicate face id in a grade");
  }
  // The defining chain-complex identity.
  for (std::size_t k = 2; k < face_ids_.size(); ++k)
    if (!(incidence_[k - 2] * incidence_[k - 1]).is_zero())
      throw std::invalid_argument(
          "cell complex: consecutive incidence matrices do not compose to zero");
}

const std::vector<std::string>& CellComplexData::face_ids(int k) const {
  if (k < 0 || k > dimension())
    throw std::out_of_range("CellComplexData::face_ids: grade out of range");
  return face_ids_[static_cast<std::size_t>(k)];
}

const IntMatrix& CellComplexData::boundary_matrix(int k) const {
  if (k < 1 || k > dimension())
    throw std::out_of_range("boundary_matrix: grade must be in [1, dimension]");
  return incidence_[static_cast<std::size_t>(k - 1)];
}

const SimplicialComplex& Complex::simplicial() const {
  if (!is_simplicial())
    throw std::logic_error("Complex: not a simplicial complex");
  return std::get<SimplicialComplex>(data_);
}

const CellComplexData& Complex::cell() const {
  if (is_simplicial()) throw std::logic_error("Complex: not a cell complex");
  return std::get<CellComplexData>(data_);
}

int Complex::dimension() const {
  return std::visit([](const auto& c) { return c.dimension(); }, data_);
}

std::size_t Complex::face_count(int k) const {
  return std::visit([k](const auto& c) { return c.face_count(k); }, data_);
}

std::string Complex::face_label(int k, std::size_t i) const {
  if (is_simplicial()) return simplicial().faces(k).at(i).label();
  return cell().face_ids(k).at(i);
}

IntMatrix Complex::boundary_matrix(int k) const {
  return std::visit(
      [k](const auto& c) -> IntMatrix { return c.boundary_matrix(k); }, data_);
}

}  // namespace simforest
