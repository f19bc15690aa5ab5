#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "simforest/complex.hpp"
#include "simforest/generators.hpp"

using namespace simforest;

namespace {

std::vector<std::vector<int>> vertex_lists(const std::vector<Face>& faces) {
  std::vector<std::vector<int>> out;
  for (const Face& f : faces) out.push_back(f.vertices);
  return out;
}

}  // namespace

TEST_CASE("single triangle closes downward in lexicographic order") {
  const auto sc = SimplicialComplex::from_facets({{1, 2, 3}});
  CHECK(sc.dimension() == 2);
  CHECK(sc.vertex_count() == 3);
  CHECK(sc.face_count(0) == 3);
  CHECK(sc.face_count(1) == 3);
  CHECK(sc.face_count(2) == 1);
  CHECK(vertex_lists(sc.faces(1)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(sc.faces(2)[0].label() == "{1,2,3}");
  CHECK_THROWS_AS(sc.faces(3), std::out_of_range);
}

TEST_CASE("facet input validation") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets({}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{1, 1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{-3, 2}}),
                  std::invalid_argument);
  // unsorted facet input is fine
  const auto sc = SimplicialComplex::from_facets({{3, 1, 2}});
  CHECK(sc.faces(2)[0].vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("maximal faces reproduce the complex, including mixed dimensions") {
  const auto sc = SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}});
  CHECK(sc.dimension() == 2);
  CHECK(sc.face_count(0) == 4);
  CHECK(sc.face_count(1) == 4);  // triangle edges plus the dangling {3,4}
  CHECK(sc.face_count(2) == 1);
  CHECK(vertex_lists(sc.maximal_faces()) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {3, 4}});

  const auto rebuilt =
      SimplicialComplex::from_facets(vertex_lists(sc.maximal_faces()));
  for (int k = 0; k <= sc.dimension(); ++k)
    CHECK(vertex_lists(rebuilt.faces(k)) == vertex_lists(sc.faces(k)));

  // the dangling edge contributes a zero row to the top boundary matrix
  const IntMatrix d2 = sc.boundary_matrix(2);
  REQUIRE(d2.rows() == 4);
  CHECK(d2(3, 0) == 0);
}

TEST_CASE("bipyramid face counts and boundary signs") {
  const auto sc = gen_bipyramid();
  CHECK(sc.dimension() == 2);
  CHECK(sc.face_count(0) == 5);
  CHECK(sc.face_count(1) == 9);
  CHECK(sc.face_count(2) == 7);
  // the two apexes 1 and 5 are not joined
  for (const Face& e : sc.faces(1))
    CHECK(e.vertices != std::vector<int>{1, 5});

  // column of {1,2,3}: +{2,3} - {1,3} + {1,2}
  const IntMatrix d2 = sc.boundary_matrix(2);
  REQUIRE(d2.rows() == 9);
  REQUIRE(d2.cols() == 7);
  CHECK(sc.faces(2)[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(d2(0, 0) == 1);   // {1,2}
  CHECK(d2(1, 0) == -1);  // {1,3}
  CHECK(d2(3, 0) == 1);   // {2,3}
  for (std::size_t r : {2u, 4u, 5u, 6u, 7u, 8u}) CHECK(d2(r, 0) == 0);

  CHECK_THROWS_AS(sc.boundary_matrix(0), std::out_of_range);
  CHECK_THROWS_AS(sc.boundary_matrix(3), std::out_of_range);
}

TEST_CASE("consecutive boundary matrices compose to zero everywhere") {
  const std::vector<Complex> all = {
      Complex(gen_bipyramid()),        Complex(gen_projective_plane_6()),
      Complex(gen_complete(5, 2)),     Complex(gen_complete(5, 3)),
      Complex(gen_simplex_boundary(4)), Complex(gen_simplex_boundary(5)),
      Complex(gen_hypercube(3, 2)),    Complex(gen_hypercube(4, 3)),
  };
  for (const Complex& g : all) {
    for (int k = 2; k <= g.dimension(); ++k) {
      const IntMatrix product = g.boundary_matrix(k - 1) * g.boundary_matrix(k);
      CHECK(product.is_zero());
    }
  }
}

TEST_CASE("complete complex on four vertices has the tetrahedral kernel") {
  const auto sc = gen_complete(4, 2);
  const IntMatrix d2 = sc.boundary_matrix(2);
  REQUIRE(d2.cols() == 4);
  // alternating signs over the lexicographic triangle list bound a cycle
  const std::vector<BigInt> kernel = {1, -1, 1, -1};
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < 4; ++c) acc += d2(r, c) * kernel[c];
    CHECK(acc == 0);
  }
}

TEST_CASE("complete complex counts and validation") {
  const auto sc = gen_complete(5, 2);
  CHECK(sc.face_count(0) == 5);
  CHECK(sc.face_count(1) == 10);
  CHECK(sc.face_count(2) == 10);
  const auto graph = gen_complete(4, 1);
  CHECK(graph.dimension() == 1);
  CHECK(graph.face_count(1) == 6);
  CHECK_THROWS_AS(gen_complete(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_complete(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_complete(2, 2), std::invalid_argument);
}

TEST_CASE("simplex boundary counts") {
  const auto sc = gen_simplex_boundary(4);
  CHECK(sc.dimension() == 2);
  CHECK(sc.face_count(0) == 4);
  CHECK(sc.face_count(1) == 6);
  CHECK(sc.face_count(2) == 4);
  // same face set as the complete 2-complex on 4 vertices
  const auto complete = gen_complete(4, 2);
  for (int k = 0; k <= 2; ++k)
    CHECK(vertex_lists(sc.faces(k)) == vertex_lists(complete.faces(k)));
  CHECK_THROWS_AS(gen_simplex_boundary(2), std::invalid_argument);
}

TEST_CASE("six-vertex projective plane is a closed surface on K6") {
  const auto sc = gen_projective_plane_6();
  CHECK(sc.face_count(0) == 6);
  CHECK(sc.face_count(1) == 15);  // complete 1-skeleton
  CHECK(sc.face_count(2) == 10);
  const IntMatrix d2 = sc.boundary_matrix(2);
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    int incident = 0;
    for (std::size_t c = 0; c < d2.cols(); ++c)
      if (d2(r, c) != 0) ++incident;
    CHECK(incident == 2);  // every edge borders exactly two triangles
  }
}

TEST_CASE("cube skeleton cell counts and boundary convention") {
  const auto cc = gen_hypercube(3, 2);
  CHECK(cc.dimension() == 2);
  CHECK(cc.face_count(0) == 8);
  CHECK(cc.face_count(1) == 12);
  CHECK(cc.face_count(2) == 6);
  CHECK((cc.boundary_matrix(1) * cc.boundary_matrix(2)).is_zero());

  const auto graph = gen_hypercube(3, 1);
  CHECK(graph.dimension() == 1);
  CHECK(graph.face_count(0) == 8);
  CHECK(graph.face_count(1) == 12);

  // one segment: boundary of "*" is ("1") - ("0")
  const auto segment = gen_hypercube(1, 1);
  CHECK(segment.face_ids(0) == std::vector<std::string>{"0", "1"});
  CHECK(segment.face_ids(1) == std::vector<std::string>{"*"});
  CHECK(segment.boundary_matrix(1) == IntMatrix{{-1}, {1}});

  // one square: edges are listed in lexicographic id order *0,*1,0*,1*
  const auto square = gen_hypercube(2, 2);
  CHECK(square.face_ids(1) ==
        std::vector<std::string>{"*0", "*1", "0*", "1*"});
  CHECK(square.boundary_matrix(2) == IntMatrix{{1}, {-1}, {-1}, {1}});

  CHECK_THROWS_AS(gen_hypercube(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_hypercube(2, 3), std::invalid_argument);
}

TEST_CASE("cell complex construction validates shape and composition") {
  using Ids = std::vector<std::vector<std::string>>;
  // a valid interval: two endpoints, one edge
  const CellComplexData interval(Ids{{"a", "b"}, {"e"}},
                                 {IntMatrix{{-1}, {1}}});
  CHECK(interval.dimension() == 1);
  CHECK(interval.face_count(1) == 1);

  // grade mismatch between ids and matrices
  CHECK_THROWS_AS(CellComplexData(Ids{{"a"}, {"e"}, {"f"}},
                                  {IntMatrix{{0}}}),
                  std::invalid_argument);
  // wrong matrix shape
  CHECK_THROWS_AS(CellComplexData(Ids{{"a", "b"}, {"e"}}, {IntMatrix{{1}}}),
                  std::invalid_argument);
  // duplicate id within a grade
  CHECK_THROWS_AS(CellComplexData(Ids{{"a", "a"}, {"e"}},
                                  {IntMatrix{{-1}, {1}}}),
                  std::invalid_argument);
  // incidence matrices whose product is nonzero
  CHECK_THROWS_AS(CellComplexData(Ids{{"a", "b"}, {"e"}, {"f"}},
                                  {IntMatrix{{-1}, {1}}, IntMatrix{{1}}}),
                  std::invalid_argument);
  // zero top grade is allowed: no 2-cells at all
  const CellComplexData no_top(Ids{{"a", "b"}, {"e"}, {}},
                               {IntMatrix{{-1}, {1}}, IntMatrix(1, 0)});
  CHECK(no_top.face_count(2) == 0);
}

TEST_CASE("uniform wrapper exposes both representations") {
  const Complex sim(gen_bipyramid());
  CHECK(sim.is_simplicial());
  CHECK(sim.dimension() == 2);
  CHECK(sim.facet_count() == 7);
  CHECK(sim.ridge_count() == 9);
  CHECK(sim.face_label(2, 0) == "{1,2,3}");
  CHECK_THROWS_AS(sim.cell(), std::logic_error);

  const Complex cube(gen_hypercube(3, 2));
  CHECK_FALSE(cube.is_simplicial());
  CHECK(cube.facet_count() == 6);
  CHECK(cube.ridge_count() == 12);
  CHECK(cube.face_label(2, 0) == "**0");
  CHECK_THROWS_AS(cube.simplicial(), std::logic_error);
}
