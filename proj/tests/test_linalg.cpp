#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pwcoh/linalg.hpp"

using namespace pwcoh;

namespace {

RationalMatrix pseudo_random_matrix(unsigned seed, int rows, int cols) {
  unsigned state = seed;
  auto next = [&state] {
    state = state * 1103515245u + 12345u;
    return static_cast<int>((state >> 16) % 7) - 3;
  };
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = make_rational(next(), 1 + (i + j) % 3);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace on fixed matrices") {
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  CHECK(nullspace(RationalMatrix(2, 2)).size() == 2);
  const auto ns = nullspace(RationalMatrix::from_rows({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -ns[0][1]);
}

TEST_CASE("rank and nullity add up on random matrices") {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    const auto m = pseudo_random_matrix(seed, 3 + seed % 3, 4 + seed % 2);
    CHECK(rank(m) == rank(m.transposed()));
    const auto ns = nullspace(m);
    CHECK(rank(m) + static_cast<int>(ns.size()) == m.cols());
    for (const auto& v : ns) {
      const auto image = m.apply(v);
      for (const auto& x : image) CHECK(x == 0);
    }
  }
}

TEST_CASE("row reduction yields a reduced echelon form") {
  const auto m = pseudo_random_matrix(21, 4, 5);
  const auto e = row_reduce(m);
  CHECK(e.rank == rank(m));
  CHECK(static_cast<int>(e.pivot_cols.size()) == e.rank);
  for (int r = 0; r < e.rank; ++r) {
    const int pc = e.pivot_cols[r];
    CHECK(e.rref.at(r, pc) == 1);
    for (int i = 0; i < e.rref.rows(); ++i)
      if (i != r) CHECK(e.rref.at(i, pc) == 0);
  }
}

TEST_CASE("solve_in_span on fixed systems") {
  const auto gens = RationalMatrix::from_columns({{1, 0}, {1, 1}});
  const auto zero = solve_in_span({0, 0}, gens);
  REQUIRE(zero.has_value());
  CHECK(*zero == std::vector<Rational>{0, 0});
  const auto first = solve_in_span({1, 0}, gens);
  REQUIRE(first.has_value());
  CHECK(*first == std::vector<Rational>{1, 0});
  CHECK(!solve_in_span({1, 0}, RationalMatrix::from_columns({{0, 1}})).has_value());
}

TEST_CASE("solve_in_span reproduces the target exactly") {
  const auto gens = pseudo_random_matrix(5, 4, 3);
  // A target inside the span by construction.
  std::vector<Rational> coeffs = {make_rational(2, 3), make_rational(-1), make_rational(5, 2)};
  const auto target = gens.apply(coeffs);
  const auto sol = solve_in_span(target, gens);
  REQUIRE(sol.has_value());
  CHECK(gens.apply(*sol) == target);
}

TEST_CASE("solve_in_span_many matches one-at-a-time solves") {
  const auto gens = pseudo_random_matrix(9, 4, 2);
  auto targets = pseudo_random_matrix(10, 4, 3);
  for (int r = 0; r < 4; ++r) targets.at(r, 0) = gens.at(r, 0) + gens.at(r, 1);
  const auto many = solve_in_span_many(targets, gens);
  REQUIRE(many.size() == 3);
  for (int c = 0; c < 3; ++c) {
    const auto one = solve_in_span(targets.column(c), gens);
    CHECK(many[c].has_value() == one.has_value());
    if (one.has_value()) CHECK(gens.apply(*many[c]) == targets.column(c));
  }
}

TEST_CASE("echelon accumulator tracks the span") {
  EchelonAccumulator acc(3);
  CHECK(acc.add({1, 0, 0}));
  CHECK(acc.add({1, 1, 0}));
  CHECK(!acc.add({3, 2, 0}));  // dependent on the first two
  CHECK(acc.rank() == 2);
  CHECK(acc.add({0, 0, make_rational(1, 7)}));
  CHECK(acc.rank() == 3);
}

TEST_CASE("stack helpers") {
  const auto a = RationalMatrix::identity(2);
  const auto b = RationalMatrix(2, 1);
  const auto h = hstack(a, b);
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 3);
  CHECK(h.at(1, 1) == 1);
  CHECK(h.at(1, 2) == 0);
  const auto v = vstack(a, RationalMatrix(1, 2));
  CHECK(v.rows() == 3);
  CHECK(v.at(2, 0) == 0);
}

TEST_CASE("quotient basis dimensions") {
  // Coboundaries equal to cocycles: nothing survives.
  const auto all = RationalMatrix::identity(3);
  CHECK(quotient_basis(all, all).representatives.empty());
  // No coboundaries: everything survives.
  const auto q = quotient_basis(all, RationalMatrix(3, 0));
  CHECK(q.representatives.size() == 3);
  CHECK(q.ambient == 3);
  // Kernel of dimension 2 with a 1-dimensional image inside it.
  const auto ker = RationalMatrix::from_columns({{1, 0, 0}, {0, 1, 0}});
  const auto im = RationalMatrix::from_columns({{1, 1, 0}});
  const auto r = quotient_basis(ker, im);
  CHECK(r.representatives.size() == 1);
  CHECK(r.cocycles.size() == 2);
  CHECK(r.coboundaries.size() == 1);
}

TEST_CASE("quotient basis rejects coboundaries outside the cocycles") {
  const auto ker = RationalMatrix::from_columns({{1, 0, 0}});
  const auto im = RationalMatrix::from_columns({{0, 1, 0}});
  CHECK_THROWS_AS(quotient_basis(ker, im), std::invalid_argument);
}

}  // TEST_SUITE
