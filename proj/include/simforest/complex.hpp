#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "simforest/int_matrix.hpp"

namespace simforest {

// A simplex face: strictly increasing positive vertex labels.
struct Face {
  std::vector<int> vertices;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  std::string label() const;  // "{1,2,3}"
  auto operator<=>(const Face&) const = default;
};

// Abstract simplicial complex, stored as the full downward closure of a
// facet list.  Faces of each dimension are kept in lexicographic order of
// their vertex lists; that order fixes every boundary-matrix row/column
// convention (and hence every determinant sign) in the library.
class SimplicialComplex {
 public:
  // Builds the downward closure.  Facet vertex lists may arrive unsorted;
  // they are sorted.  Rejects empty input, facets with fewer than two
  // vertices, duplicate vertices, and non-positive labels.
  static SimplicialComplex from_facets(std::vector<std::vector<int>> facets);

  int dimension() const { return dimension_; }
  int vertex_count() const { return static_cast<int>(faces_by_dim_[0].size()); }

  const std::vector<Face>& faces(int k) const;
  std::size_t face_count(int k) const { return faces(k).size(); }

  // The maximal faces, lexicographically sorted.  Rebuilding from this list
  // reproduces the complex exactly.
  const std::vector<Face>& maximal_faces() const { return maximal_faces_; }

  // Boundary matrix from k-faces to (k-1)-faces, 1 <= k <= dimension():
  // rows are (k-1)-faces, columns are k-faces (both in lexicographic order);
  // the column of f = {v_0 < ... < v_k} holds (-1)^j at the row f \ {v_j}.
  IntMatrix boundary_matrix(int k) const;

 private:
  int dimension_ = 0;
  std::vector<std::vector<Face>> faces_by_dim_;  // index = dimension, 0..d
  std::vector<Face> maximal_faces_;
};

// A chain complex given by explicit cells: per-grade identifier lists plus
// integer incidence matrices.  Grade-k incidence maps k-cells to (k-1)-cells
// (rows = (k-1)-cells, columns = k-cells, in stored order).  Construction
// verifies that consecutive incidence matrices compose to zero.
class CellComplexData {
 public:
  // face_ids_by_dim[k] lists grade-k cell ids (k = 0..d, d >= 1);
  // incidence_by_dim[k-1] is the grade-k incidence matrix (k = 1..d).
  CellComplexData(std::vector<std::vector<std::string>> face_ids_by_dim,
                  std::vector<IntMatrix> incidence_by_dim);

  int dimension() const { return static_cast<int>(face_ids_.size()) - 1; }
  const std::vector<std::string>& face_ids(int k) const;
  std::size_t face_count(int k) const { return face_ids(k).size(); }
  const IntMatrix& boundary_matrix(int k) const;

 private:
  std::vector<std::vector<std::string>> face_ids_;
  std::vector<IntMatrix> incidence_;  // incidence_[k-1] = grade-k matrix
};

// Uniform handle over the two complex representations.  Forest and
// orientation computations only need grades d and d-1, but reports use the
// full grading.
class Complex {
 public:
  Complex(SimplicialComplex sc) : data_(std::move(sc)) {}
  Complex(CellComplexData cc) : data_(std::move(cc)) {}

  bool is_simplicial() const {
    return std::holds_alternative<SimplicialComplex>(data_);
  }
  const SimplicialComplex& simplicial() const;
  const CellComplexData& cell() const;

  int dimension() const;
  std::size_t face_count(int k) const;
  std::string face_label(int k, std::size_t i) const;
  IntMatrix boundary_matrix(int k) const;

  std::size_t facet_count() const { return face_count(dimension()); }
  std::size_t ridge_count() const { return face_count(dimension() - 1); }

 private:
  std::variant<SimplicialComplex, CellComplexData> data_;
};

}  // namespace simforest
