#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pwcoh/polyform.hpp"
#include "pwcoh/random_forms.hpp"

using namespace pwcoh;

namespace {

LieAlgebra affine2() { return LieAlgebra(2, {{0, 1, 1, make_rational(1)}}); }

LieAlgebra so3() {
  return LieAlgebra(3, {{0, 1, 2, make_rational(1)},
                        {0, 2, 1, make_rational(-1)},
                        {1, 2, 0, make_rational(1)}});
}

Polynomial constant(int nvars, long c) { return Polynomial::constant(nvars, make_rational(c)); }

}  // namespace

TEST_SUITE("polyform") {

TEST_CASE("terms cancel to zero") {
  PolyForm w(Simplex({0, 1, 2}), 0, 1);
  w.add_term(0b01, 0, Polynomial::variable(2, 1));
  CHECK(!w.is_zero());
  CHECK(w.coefficient_degree() == 1);
  w.add_term(0b01, 0, Polynomial::variable(2, 1).scaled(make_rational(-1)));
  CHECK(w.is_zero());
}

TEST_CASE("add_term rejects out-of-range masks and degree mismatches") {
  PolyForm w(Simplex({0, 1}), 1, 1);
  CHECK_THROWS_AS(w.add_term(0b10, 0, constant(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(w.add_term(0, 0b10, constant(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(w.add_term(0b01, 0b01, constant(1, 1)), std::invalid_argument);
}

TEST_CASE("wedge with the constant unit form") {
  const Simplex s({0, 1, 2});
  PolyForm one(s, 2, 0);
  one.add_term(0, 0, constant(2, 1));
  SeededRng rng(3);
  for (int degree = 0; degree <= 4; ++degree) {
    const auto w = random_polyform(rng, s, 2, degree, 2);
    CHECK(wedge(one, w) == w);
    CHECK(wedge(w, one) == w);
  }
}

TEST_CASE("wedge nilpotence and the Koszul sign") {
  const Simplex s({0, 1});
  PolyForm dt1(s, 1, 1);
  dt1.add_term(0b1, 0, Polynomial::variable(1, 0));  // t1 dt1
  CHECK(wedge(dt1, dt1).is_zero());

  PolyForm th1(s, 1, 1);
  th1.add_term(0, 0b1, constant(1, 1));  // theta^1
  // Odd-degree forms anticommute.
  CHECK(wedge(dt1, th1) == wedge(th1, dt1).scaled(make_rational(-1)));
  CHECK(!wedge(dt1, th1).is_zero());
}

TEST_CASE("wedge graded sign on random forms") {
  SeededRng rng(11);
  const Simplex s({0, 2, 5});
  for (int i = 0; i < 24; ++i) {
    const int pa = rng.int_in(0, 3);
    const int pb = rng.int_in(0, 3);
    const auto a = random_polyform(rng, s, 2, pa, 2);
    const auto b = random_polyform(rng, s, 2, pb, 2);
    const auto sign = (pa * pb) % 2 == 0 ? make_rational(1) : make_rational(-1);
    CHECK(wedge(a, b) == wedge(b, a).scaled(sign));
  }
}

TEST_CASE("differential of a coordinate function") {
  const Simplex s({0, 1});
  PolyForm w(s, 0, 0);
  w.add_term(0, 0, Polynomial::variable(1, 0));  // t1
  PolyForm expected(s, 0, 1);
  expected.add_term(0b1, 0, constant(1, 1));  // dt1
  CHECK(differential(w, LieAlgebra::abelian(0)) == expected);
}

TEST_CASE("differential with an abelian fiber kills constant fiber terms") {
  PolyForm w(Simplex({0, 1, 2}), 2, 1);
  w.add_term(0, 0b10, constant(2, 1));  // theta^2
  CHECK(differential(w, LieAlgebra::abelian(2)).is_zero());
}

TEST_CASE("differential applies the fiber bracket") {
  // d theta^2 = -theta^1 ^ theta^2 for the affine algebra, on any simplex.
  const Simplex s({0, 1, 2});
  PolyForm w(s, 2, 1);
  w.add_term(0, 0b10, constant(2, 1));
  PolyForm expected(s, 2, 2);
  expected.add_term(0, 0b11, constant(2, -1));
  CHECK(differential(w, affine2()) == expected);
}

TEST_CASE("differential squares to zero on random forms") {
  SeededRng rng(17);
  const std::vector<LieAlgebra> fibers = {LieAlgebra::abelian(0), LieAlgebra::abelian(2),
                                          affine2(), so3()};
  for (int i = 0; i < 32; ++i) {
    const auto& g = fibers[i % fibers.size()];
    const Simplex s({0, 1 + i % 2, 3, 7});
    const int degree = rng.int_in(0, 3 + g.dim());
    const auto w = random_polyform(rng, s, g.dim(), degree, 2);
    CHECK(differential(differential(w, g), g).is_zero());
  }
}

TEST_CASE("differential satisfies the graded Leibniz rule") {
  SeededRng rng(19);
  const auto g = affine2();
  const Simplex s({0, 1, 2});
  for (int i = 0; i < 16; ++i) {
    const int pa = rng.int_in(0, 2);
    const auto a = random_polyform(rng, s, 2, pa, 2);
    const auto b = random_polyform(rng, s, 2, rng.int_in(0, 2), 2);
    const auto sign = pa % 2 == 0 ? make_rational(1) : make_rational(-1);
    CHECK(differential(wedge(a, b), g) ==
          wedge(differential(a, g), b) + wedge(a, differential(b, g)).scaled(sign));
  }
}

TEST_CASE("restriction of constants and coordinates") {
  const Simplex edge({0, 1});
  PolyForm c(edge, 0, 0);
  c.add_term(0, 0, constant(1, 7));
  PolyForm c0(Simplex({0}), 0, 0);
  c0.add_term(0, 0, constant(0, 7));
  CHECK(restrict_to_face(c, Simplex({0})) == c0);

  PolyForm t1(edge, 0, 0);
  t1.add_term(0, 0, Polynomial::variable(1, 0));
  PolyForm one(Simplex({1}), 0, 0);
  one.add_term(0, 0, constant(0, 1));
  CHECK(restrict_to_face(t1, Simplex({1})) == one);
  CHECK(restrict_to_face(t1, Simplex({0})).is_zero());
}

TEST_CASE("restriction kills differentials of absent coordinates") {
  PolyForm w(Simplex({0, 1, 2}), 0, 1);
  w.add_term(0b01, 0, constant(2, 1));  // dt1
  CHECK(restrict_to_face(w, Simplex({0, 2})).is_zero());
}

TEST_CASE("restriction is transitive") {
  SeededRng rng(23);
  const Simplex s({0, 1, 2, 3});
  for (int i = 0; i < 12; ++i) {
    const auto w = random_polyform(rng, s, 2, rng.int_in(0, 3), 2);
    const Simplex mid({0, 1, 3});
    const Simplex small({0, 3});
    CHECK(restrict_to_face(restrict_to_face(w, mid), small) == restrict_to_face(w, small));
  }
}

TEST_CASE("affine pullback relabels and round-trips") {
  const Simplex target({0, 1});
  const Simplex source({5, 9});
  PolyForm w(target, 1, 1);
  w.add_term(0b1, 0, Polynomial::variable(1, 0));
  w.add_term(0, 0b1, constant(1, 3));
  CHECK(affine_pullback(w, target, target) == w);
  const auto pulled = affine_pullback(w, source, target);
  CHECK(pulled.simplex() == source);
  CHECK(affine_pullback(pulled, target, source) == w);
}

TEST_CASE("retraction pullback of a constant") {
  // A constant c on the facet opposite vertex position j extends to
  // c (1 - t_j)^m; with m = 1 it restricts to c on the facet and vanishes at
  // the opposite vertex.
  const Simplex d({0, 1, 2});
  const int j = 2;
  const Simplex alpha = d.facet_opposite(j);  // [0, 1]
  PolyForm w(alpha, 0, 0);
  w.add_term(0, 0, constant(1, 5));
  CHECK(required_cutoff_exponent(w, d, j) == 1);
  const auto ext = retraction_pullback_with_cutoff(w, d, j, 1);
  CHECK(restrict_to_face(ext, alpha) == w);
  CHECK(restrict_to_face(ext, Simplex({2})).is_zero());
  PolyForm expected(d, 0, 0);
  expected.add_term(0, 0, constant(2, 5) - Polynomial::variable(2, 1).scaled(make_rational(5)));
  CHECK(ext == expected);
}

TEST_CASE("retraction pullback restricts back exactly") {
  SeededRng rng(29);
  const Simplex d({0, 1, 2, 3});
  for (int i = 0; i < 12; ++i) {
    const int j = rng.int_in(0, 3);
    const Simplex alpha = d.facet_opposite(j);
    const auto w = random_polyform(rng, alpha, 2, rng.int_in(0, 2), 2);
    const int m = required_cutoff_exponent(w, d, j);
    CHECK(m >= 1);
    const auto ext = retraction_pullback_with_cutoff(w, d, j, m);
    CHECK(restrict_to_face(ext, alpha) == w);
    if (!w.is_zero() && m > 1)
      CHECK_THROWS_AS(retraction_pullback_with_cutoff(w, d, j, m - 1), std::invalid_argument);
  }
}

TEST_CASE("evaluation pairs differentials and covectors with arguments") {
  const Simplex edge({0, 1});
  PolyForm c(edge, 0, 0);
  c.add_term(0, 0, constant(1, 9));
  CHECK(evaluate(c, {make_rational(1, 3), make_rational(2, 3)}, {}) == 9);

  PolyForm dt1(edge, 0, 1);
  dt1.add_term(0b1, 0, constant(1, 1));
  const FormArgument u{{make_rational(-1), make_rational(1)}, {}};
  CHECK(evaluate(dt1, {make_rational(1, 2), make_rational(1, 2)}, {u}) == 1);

  PolyForm th1(edge, 2, 1);
  th1.add_term(0, 0b1, constant(1, 1));
  const FormArgument e1{{0, 0}, {1, 0}};
  const FormArgument e2{{0, 0}, {0, 1}};
  CHECK(evaluate(th1, {make_rational(1, 2), make_rational(1, 2)}, {e1}) == 1);
  CHECK(evaluate(th1, {make_rational(1, 2), make_rational(1, 2)}, {e2}) == 0);
}

TEST_CASE("restriction agrees with evaluation at a boundary point") {
  // dt1 on the triangle, restricted to the face [0,2], must evaluate like the
  // restriction itself on arguments lifted from the face.
  PolyForm w(Simplex({0, 1, 2}), 0, 1);
  w.add_term(0b01, 0, constant(2, 1));
  const auto r = restrict_to_face(w, Simplex({0, 2}));
  CHECK(r.is_zero());
  const std::vector<Rational> lifted_point = {make_rational(1, 3), 0, make_rational(2, 3)};
  const FormArgument lifted_u{{make_rational(-1), 0, make_rational(1)}, {}};
  CHECK(evaluate(w, lifted_point, {lifted_u}) == 0);
}

}  // TEST_SUITE
