#include <doctest.h>

#include <stdexcept>

#include "pwcoh/simplicial.hpp"

using namespace pwcoh;

TEST_SUITE("simplicial") {

TEST_CASE("simplex basics") {
  const Simplex s({2, 5, 9});
  CHECK(s.dimension() == 2);
  CHECK(s.has_vertex(5));
  CHECK(!s.has_vertex(3));
  CHECK(s.position_of(9) == 2);
  CHECK(!s.position_of(4).has_value());
  CHECK(s.facet_opposite(1) == Simplex({2, 9}));
  CHECK(s.has_face(Simplex({2, 9})));
  CHECK(!s.has_face(Simplex({2, 3})));
  CHECK(join(Simplex({2, 9}), 5) == s);
  CHECK_THROWS_AS(Simplex({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex({5, 2}), std::invalid_argument);
}

TEST_CASE("proper faces of a triangle") {
  const auto faces = Simplex({0, 1, 2}).proper_faces();
  CHECK(faces.size() == 6);
  CHECK(faces.front() == Simplex({0}));
  CHECK(faces.back() == Simplex({1, 2}));
}

TEST_CASE("closure sizes") {
  CHECK(SimplicialComplex::closure({}).empty());
  CHECK(SimplicialComplex::closure({Simplex({0, 1, 2})}).size() == 7);
  CHECK(SimplicialComplex::closure({Simplex({0, 1}), Simplex({1, 2}), Simplex({0, 2})}).size() == 6);
}

TEST_CASE("closure is idempotent and monotone") {
  const auto k = SimplicialComplex::closure({Simplex({0, 1, 2}), Simplex({2, 3})});
  std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
  CHECK(SimplicialComplex::closure(all) == k);
  const auto smaller = SimplicialComplex::closure({Simplex({0, 1, 2})});
  CHECK(is_subcomplex(smaller, k));
}

TEST_CASE("constructor rejects a face-incomplete set") {
  CHECK_THROWS_AS(SimplicialComplex({Simplex({0, 1})}), std::invalid_argument);
}

TEST_CASE("boundary complexes") {
  CHECK(boundary_complex(Simplex({0, 1})) ==
        SimplicialComplex::closure({Simplex({0}), Simplex({1})}));
  CHECK(boundary_complex(Simplex({0, 1, 2})).size() == 6);
  CHECK(boundary_complex(Simplex({0, 1, 2, 3})).size() == 14);
}

TEST_CASE("subcomplex predicate") {
  const auto tri = SimplicialComplex::closure({Simplex({0, 1, 2})});
  CHECK(is_subcomplex(boundary_complex(Simplex({0, 1, 2})), tri));
  CHECK(!is_subcomplex(SimplicialComplex::closure({Simplex({0, 3})}), tri));
  CHECK(is_subcomplex(SimplicialComplex(), tri));
}

TEST_CASE("cover decomposition of the circle") {
  const auto k0 = SimplicialComplex::closure({Simplex({0, 1}), Simplex({1, 2})});
  const auto k1 = SimplicialComplex::closure({Simplex({0, 2})});
  const auto c = cover(k0, k1);
  CHECK(c.whole.size() == 6);
  CHECK(c.overlap == SimplicialComplex::closure({Simplex({0}), Simplex({2})}));
}

TEST_CASE("degenerate and disjoint covers") {
  const auto k = SimplicialComplex::closure({Simplex({0, 1, 2})});
  CHECK(cover(k, k).overlap == k);
  const auto a = SimplicialComplex::closure({Simplex({0, 1})});
  const auto b = SimplicialComplex::closure({Simplex({2, 3})});
  CHECK(cover(a, b).overlap.empty());
  CHECK(cover(a, b).whole.size() == 6);
}

TEST_CASE("skeleton") {
  const auto tri = SimplicialComplex::closure({Simplex({0, 1, 2})});
  CHECK(skeleton(tri, 0).size() == 3);
  CHECK(skeleton(tri, 1).size() == 6);
  CHECK(skeleton(tri, 2) == tri);
}

TEST_CASE("maximal simplices and vertex ids") {
  const auto k = SimplicialComplex::closure({Simplex({0, 1, 2}), Simplex({2, 3})});
  const auto maximal = k.maximal_simplices();
  CHECK(maximal == std::vector<Simplex>{Simplex({2, 3}), Simplex({0, 1, 2})});
  CHECK(k.vertex_ids() == std::vector<int>{0, 1, 2, 3});
  CHECK(k.dimension() == 2);
}

}  // TEST_SUITE
