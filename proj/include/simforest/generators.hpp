#pragma once

#include "simforest/complex.hpp"

namespace simforest {

// Complete d-dimensional complex on n vertices: all subsets of {1..n} of
// size at most d+1.  Requires 1 <= d < n.
SimplicialComplex gen_complete(int n, int d);

// Boundary of the (n-1)-simplex: all proper subsets of {1..n}.  Requires
// n >= 3 (dimension n-2 >= 1).
SimplicialComplex gen_simplex_boundary(int n);

// Triangulated bipyramid: two tetrahedron-like caps over the square
// 2-3-4... concretely, all seven triangles on vertices {1..5} avoiding the
// missing edge {1,5} (apexes 1 and 5 joined through the equator {2,3,4}).
SimplicialComplex gen_bipyramid();

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex gen_projective_plane_6();

// d-skeleton of the n-dimensional cube as a cubical cell complex.  Cells
// are words over {0,1,*} of length n (a k-cell has k stars), listed in
// lexicographic string order per grade.  The boundary of a cell with free
// coordinates j_1 < ... < j_k is
//   sum_i (-1)^(i-1) * [(cell with x_{j_i}=1) - (cell with x_{j_i}=0)].
// Requires 1 <= d <= n.
CellComplexData gen_hypercube(int n, int d);

}  // namespace simforest
