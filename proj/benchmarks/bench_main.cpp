#include <benchmark/benchmark.h>

#include "pwcoh/cohomology.hpp"
#include "pwcoh/mayer_vietoris.hpp"
#include "pwcoh/piecewise.hpp"
#include "pwcoh/random_forms.hpp"

namespace {

using namespace pwcoh;

SimplicialComplex circle(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Simplex({i, i + 1}));
  edges.push_back(Simplex({0, n - 1}));
  return SimplicialComplex::closure(edges);
}

LieAlgebra so3() {
  return LieAlgebra(3, {{0, 1, 2, make_rational(1)},
                        {0, 2, 1, make_rational(-1)},
                        {1, 2, 0, make_rational(1)}});
}

void bench_truncation_dim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CohomologyEngine engine(AlgebroidComplex(circle(6), LieAlgebra::abelian(1)));
    int total = 0;
    for (int p = 0; p <= engine.max_form_degree(); ++p) total += engine.dim(p, n);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bench_truncation_dim)->Arg(2)->Arg(4);

void bench_stabilized_betti(benchmark::State& state) {
  for (auto _ : state) {
    CohomologyEngine engine(AlgebroidComplex(circle(4), LieAlgebra::abelian(1)));
    const auto report = engine.stabilized_betti(1, 2, 6);
    benchmark::DoNotOptimize(report.betti.size());
  }
}
BENCHMARK(bench_stabilized_betti);

void bench_boundary_extension(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::vector<int> verts(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) verts[static_cast<std::size_t>(i)] = i;
  const Simplex d(verts);
  SeededRng rng(7);
  const PiecewiseForm xi = random_boundary_form(rng, d, so3(), 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extend_over_boundary(xi, d).is_zero());
  }
}
BENCHMARK(bench_boundary_extension)->Arg(2)->Arg(3);

void bench_les_verification(benchmark::State& state) {
  const SimplicialComplex k0 =
      SimplicialComplex::closure({Simplex({0, 1}), Simplex({1, 2})});
  const SimplicialComplex k1 =
      SimplicialComplex::closure({Simplex({2, 3}), Simplex({0, 3})});
  for (auto _ : state) {
    MVSetup setup(k0, k1, LieAlgebra::abelian(1));
    const LESReport report = verify_les_exactness(setup);
    benchmark::DoNotOptimize(report.verified);
  }
}
BENCHMARK(bench_les_verification);

}  // namespace

BENCHMARK_MAIN();
