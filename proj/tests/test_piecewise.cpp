#include <doctest.h>

#include <map>
#include <vector>

#include "pwcoh/piecewise.hpp"
#include "pwcoh/random_forms.hpp"

using namespace pwcoh;

namespace {

LieAlgebra ab1() { return LieAlgebra::abelian(1); }

SimplicialComplex circle() {
  return SimplicialComplex::closure({Simplex({0, 1}), Simplex({1, 2}), Simplex({0, 2})});
}

// Compatible family on l: one global polynomial form on the simplex spanned
// by all vertex ids, restricted to every simplex of l.
PiecewiseForm spanned_form(SeededRng& rng, const SimplicialComplex& l,
                           const LieAlgebra& g, int degree) {
  const Simplex big(l.vertex_ids());
  const auto w = random_polyform(rng, big, g.dim(), degree, 2);
  std::map<Simplex, PolyForm> parts;
  for (const auto& s : l.simplices()) parts.emplace(s, restrict_to_face(w, s));
  return PiecewiseForm(AlgebroidComplex(l, g), degree, parts);
}

}  // namespace

TEST_SUITE("piecewise") {

TEST_CASE("compatibility detects a non-interpolating part") {
  const auto k = SimplicialComplex::closure({Simplex({0, 1})});
  auto w = PiecewiseForm::zero(AlgebroidComplex(k, LieAlgebra::abelian(0)), 0);
  PolyForm v1(Simplex({1}), 0, 0);
  v1.add_term(0, 0, Polynomial::constant(0, make_rational(1)));
  w.set_part(Simplex({1}), v1);
  // Vertex values 0 and 1 with the zero edge part: the edge does not
  // interpolate its endpoints.
  CHECK(!validate_compatibility(w));
  PolyForm edge(Simplex({0, 1}), 0, 0);
  edge.add_term(0, 0, Polynomial::variable(1, 0));
  w.set_part(Simplex({0, 1}), edge);
  CHECK(validate_compatibility(w));
}

TEST_CASE("global differential of a constant vanishes") {
  SeededRng rng(1);
  const auto w = spanned_form(rng, circle(), ab1(), 0);
  auto c = PiecewiseForm::zero(AlgebroidComplex(circle(), ab1()), 0);
  for (const auto& [s, part] : c.parts()) {
    PolyForm p(s, 1, 0);
    p.add_term(0, 0, Polynomial::constant(s.dimension(), make_rational(4)));
    c.set_part(s, p);
  }
  CHECK(validate_compatibility(c));
  CHECK(global_differential(c).is_zero());
}

TEST_CASE("global differential squares to zero") {
  SeededRng rng(2);
  for (int degree = 0; degree <= 2; ++degree) {
    const auto w = spanned_form(rng, circle(), ab1(), degree);
    CHECK(validate_compatibility(w));
    CHECK(global_differential(global_differential(w)).is_zero());
  }
}

TEST_CASE("constant fiber covector is closed on the circle") {
  auto w = PiecewiseForm::zero(AlgebroidComplex(circle(), ab1()), 1);
  for (const auto& [s, part] : w.parts()) {
    PolyForm p(s, 1, 1);
    p.add_term(0, 0b1, Polynomial::constant(s.dimension(), make_rational(1)));
    w.set_part(s, p);
  }
  CHECK(validate_compatibility(w));
  CHECK(global_differential(w).is_zero());
}

TEST_CASE("restriction to subcomplexes") {
  SeededRng rng(3);
  const auto k = circle();
  const auto w = spanned_form(rng, k, ab1(), 1);
  CHECK(restrict_to_subcomplex(w, k) == w);
  CHECK(restrict_to_subcomplex(w, SimplicialComplex()).parts().empty());
  const auto arc = SimplicialComplex::closure({Simplex({0, 1})});
  const auto points = SimplicialComplex::closure({Simplex({0}), Simplex({1})});
  CHECK(restrict_to_subcomplex(restrict_to_subcomplex(w, arc), points) ==
        restrict_to_subcomplex(w, points));
}

TEST_CASE("differential commutes with restriction") {
  SeededRng rng(4);
  const auto k = SimplicialComplex::closure({Simplex({0, 1, 2}), Simplex({1, 2, 3})});
  const auto l = SimplicialComplex::closure({Simplex({1, 2}), Simplex({3})});
  for (int degree = 0; degree <= 2; ++degree) {
    const auto w = spanned_form(rng, k, ab1(), degree);
    CHECK(global_differential(restrict_to_subcomplex(w, l)) ==
          restrict_to_subcomplex(global_differential(w), l));
  }
}

TEST_CASE("boundary extension round trip with residual sweep") {
  SeededRng rng(5);
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<int> verts;
    for (int v = 0; v <= dim; ++v) verts.push_back(v);
    const Simplex d(verts);
    const auto xi = random_boundary_form(rng, d, ab1(), rng.int_in(0, dim), 2);
    const auto traced = extend_over_boundary_traced(xi, d);
    CHECK(validate_compatibility(traced.extension));
    CHECK(restrict_to_subcomplex(traced.extension, boundary_complex(d)) == xi);
    REQUIRE(traced.residuals.size() == static_cast<std::size_t>(dim) + 1);
    // After step s the residual vanishes on every facet processed so far.
    for (std::size_t s = 0; s < traced.residuals.size(); ++s)
      for (std::size_t q = 0; q <= s; ++q)
        CHECK(traced.residuals[s].part(d.facet_opposite(static_cast<int>(q))).is_zero());
    CHECK(traced.residuals.back().is_zero());
  }
}

TEST_CASE("boundary extension of zero is zero") {
  const Simplex d({0, 1, 2});
  const auto zero = PiecewiseForm::zero(AlgebroidComplex(boundary_complex(d), ab1()), 1);
  CHECK(extend_over_boundary(zero, d).is_zero());
}

TEST_CASE("interpolating vertex values across an edge") {
  const Simplex d({0, 1});
  auto xi = PiecewiseForm::zero(AlgebroidComplex(boundary_complex(d), LieAlgebra::abelian(0)), 0);
  PolyForm v1(Simplex({1}), 0, 0);
  v1.add_term(0, 0, Polynomial::constant(0, make_rational(1)));
  xi.set_part(Simplex({1}), v1);
  const auto ext = extend_over_boundary(xi, d);
  CHECK(restrict_to_subcomplex(ext, boundary_complex(d)) == xi);
  const auto& part = ext.part(d);
  CHECK(evaluate(part, {1, 0}, {}) == 0);
  CHECK(evaluate(part, {0, 1}, {}) == 1);
}

TEST_CASE("descending facet order also round-trips") {
  SeededRng rng(6);
  const Simplex d({0, 1, 2});
  const auto xi = random_boundary_form(rng, d, ab1(), 1, 2);
  const auto ext = extend_over_boundary(xi, d, FacetOrder::kDescending);
  CHECK(validate_compatibility(ext));
  CHECK(restrict_to_subcomplex(ext, boundary_complex(d)) == xi);
}

TEST_CASE("partial boundary data extends and restricts back") {
  SeededRng rng(7);
  const Simplex d({0, 1, 2});
  const auto g = ab1();
  // One facet given: the result must restrict to it exactly.
  const auto w = random_polyform(rng, Simplex({0, 1}), 1, 1, 2);
  std::map<Simplex, PolyForm> given = {{Simplex({0, 1}), w}};
  const auto ext = extend_partial_boundary(given, d, g);
  CHECK(validate_compatibility(ext));
  CHECK(ext.part(Simplex({0, 1})) == w);

  // No facets given: the zero form.
  CHECK(extend_partial_boundary({}, d, g).is_zero());
}

TEST_CASE("all facets given matches full boundary extension on the boundary") {
  SeededRng rng(8);
  const Simplex d({0, 1, 2});
  const auto xi = random_boundary_form(rng, d, ab1(), 1, 2);
  std::map<Simplex, PolyForm> given;
  for (const auto& f : d.facets()) given.emplace(f, xi.part(f));
  const auto a = extend_partial_boundary(given, d, ab1());
  // Interior parts may differ between the algorithms; the boundary restriction
  // contract is what both must satisfy.
  CHECK(restrict_to_subcomplex(a, boundary_complex(d)) == xi);
}

TEST_CASE("subcomplex extension round trip") {
  SeededRng rng(9);
  const auto k = SimplicialComplex::closure({Simplex({0, 1, 2}), Simplex({2, 3})});
  const auto l = SimplicialComplex::closure({Simplex({0, 1}), Simplex({3})});
  for (int degree = 0; degree <= 2; ++degree) {
    const auto w = spanned_form(rng, l, ab1(), degree);
    const auto ext = extend_from_subcomplex(w, k);
    CHECK(validate_compatibility(ext));
    CHECK(restrict_to_subcomplex(ext, l) == w);
  }
}

TEST_CASE("extension from the full complex is the identity") {
  SeededRng rng(10);
  const auto k = circle();
  const auto w = spanned_form(rng, k, ab1(), 1);
  CHECK(extend_from_subcomplex(w, k) == w);
}

TEST_CASE("two opposite vertex values extend over the circle") {
  const auto k = circle();
  const auto l = SimplicialComplex::closure({Simplex({0}), Simplex({2})});
  auto w = PiecewiseForm::zero(AlgebroidComplex(l, LieAlgebra::abelian(0)), 0);
  PolyForm plus(Simplex({0}), 0, 0);
  plus.add_term(0, 0, Polynomial::constant(0, make_rational(1)));
  PolyForm minus(Simplex({2}), 0, 0);
  minus.add_term(0, 0, Polynomial::constant(0, make_rational(-1)));
  w.set_part(Simplex({0}), plus);
  w.set_part(Simplex({2}), minus);
  const auto ext = extend_from_subcomplex(w, k);
  CHECK(validate_compatibility(ext));
  CHECK(ext.part(Simplex({0})) == plus);
  CHECK(ext.part(Simplex({2})) == minus);
}

TEST_CASE("extension from the empty subcomplex is zero") {
  const auto k = circle();
  const auto empty = PiecewiseForm(AlgebroidComplex(SimplicialComplex(), ab1()), 1, {});
  CHECK(extend_from_subcomplex(empty, k).is_zero());
}

TEST_CASE("spread of a top form over its closure") {
  SeededRng rng(11);
  const auto w = random_polyform(rng, Simplex({0, 1, 2}), 1, 1, 2);
  const auto spread = spread_over_closure(w, ab1());
  CHECK(validate_compatibility(spread));
  CHECK(spread.part(Simplex({0, 1, 2})) == w);
}

}  // TEST_SUITE
