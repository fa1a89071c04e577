#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pwcoh/lie_algebra.hpp"
#include "pwcoh/linalg.hpp"

using namespace pwcoh;

namespace {

LieAlgebra affine2() { return LieAlgebra(2, {{0, 1, 1, make_rational(1)}}); }

LieAlgebra so3() {
  return LieAlgebra(3, {{0, 1, 2, make_rational(1)},
                        {0, 2, 1, make_rational(-1)},
                        {1, 2, 0, make_rational(1)}});
}

// Independent Jacobi check: contract structure constants directly,
// sum_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l) = 0 for all i<j<k, l.
bool jacobi_by_contraction(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational sum = 0;
          for (int m = 0; m < n; ++m) {
            sum += g.structure_constant(i, j, m) * g.structure_constant(m, k, l);
            sum += g.structure_constant(j, k, m) * g.structure_constant(m, i, l);
            sum += g.structure_constant(k, i, m) * g.structure_constant(m, j, l);
          }
          if (sum != 0) return false;
        }
  return true;
}

}  // namespace

TEST_SUITE("lie_algebra") {

TEST_CASE("structure constants are antisymmetric") {
  const auto g = so3();
  CHECK(g.structure_constant(0, 1, 2) == 1);
  CHECK(g.structure_constant(1, 0, 2) == -1);
  CHECK(g.structure_constant(1, 1, 2) == 0);
  CHECK(g.bracket(1, 2) == std::vector<Rational>{1, 0, 0});
  CHECK(g.bracket(2, 1) == std::vector<Rational>{-1, 0, 0});
}

TEST_CASE("constructor rejects malformed entries") {
  CHECK_THROWS_AS(LieAlgebra(2, {{1, 0, 0, make_rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 2, 0, make_rational(1)}}), std::invalid_argument);
}

TEST_CASE("validate agrees with the contraction oracle on fixed algebras") {
  const std::vector<LieAlgebra> algebras = {
      LieAlgebra::abelian(0), LieAlgebra::abelian(3), affine2(), so3(),
      // [x1,x2] = x3, [x1,x3] = x3: solvable, Jacobi holds.
      LieAlgebra(3, {{0, 1, 2, make_rational(1)}, {0, 2, 2, make_rational(1)}}),
      // [x1,x2] = x3, [x1,x3] = x1: Jacobi fails.
      LieAlgebra(3, {{0, 1, 2, make_rational(1)}, {0, 2, 0, make_rational(1)}}),
      // so(3) with one sign flipped: Jacobi still holds (isomorphic algebra).
      LieAlgebra(3, {{0, 1, 2, make_rational(1)},
                     {0, 2, 1, make_rational(1)},
                     {1, 2, 0, make_rational(1)}}),
  };
  for (const auto& g : algebras) CHECK(g.validate() == jacobi_by_contraction(g));
  CHECK(!algebras[5].validate());
  CHECK(algebras[5].jacobi_failure().has_value());
}

TEST_CASE("validate agrees with the contraction oracle on random brackets") {
  // Pseudo-random small structure constants; both verdicts must match.
  unsigned state = 12345;
  auto next = [&state] {
    state = state * 1103515245u + 12345u;
    return static_cast<int>((state >> 16) % 5) - 2;
  };
  int disagreements = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BracketEntry> entries;
    const int n = 3 + trial % 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const int c = next();
          if (c != 0) entries.push_back({i, j, k, make_rational(c)});
        }
    const LieAlgebra g(n, entries);
    if (g.validate() != jacobi_by_contraction(g)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("differential of a generator covector") {
  CHECK(affine2().ce_diff_covector(0).empty());
  const auto d2 = affine2().ce_diff_covector(1);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].first == Mask{0b11});
  CHECK(d2[0].second == -1);

  // d theta^3 = -theta^1^theta^2 and cyclically for the other generators.
  const auto g = so3();
  const auto d3 = g.ce_diff_covector(2);
  REQUIRE(d3.size() == 1);
  CHECK(d3[0].first == Mask{0b011});
  CHECK(d3[0].second == -1);
  const auto d1 = g.ce_diff_covector(0);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].first == Mask{0b110});
  CHECK(d1[0].second == -1);
  const auto dth2 = g.ce_diff_covector(1);
  REQUIRE(dth2.size() == 1);
  CHECK(dth2[0].first == Mask{0b101});
  CHECK(dth2[0].second == 1);
}

TEST_CASE("differential matrices") {
  CHECK(ce_differential_matrix(LieAlgebra::abelian(3), 1).is_zero());
  CHECK(ce_differential_matrix(affine2(), 1) ==
        RationalMatrix::from_rows({{0, -1}}));
  for (const auto& g : {affine2(), so3()}) {
    for (int j = 0; j <= g.dim(); ++j) {
      const auto a = ce_differential_matrix(g, j);
      const auto b = ce_differential_matrix(g, j + 1);
      CHECK((b * a).is_zero());
    }
  }
}

TEST_CASE("cohomology of the fixed algebras") {
  CHECK(ce_betti(LieAlgebra::abelian(0)) == std::vector<int>{1});
  CHECK(ce_betti(LieAlgebra::abelian(2)) == std::vector<int>{1, 2, 1});
  CHECK(ce_betti(affine2()) == std::vector<int>{1, 1, 0});
  CHECK(ce_betti(so3()) == std::vector<int>{1, 0, 0, 1});
}

}  // TEST_SUITE
