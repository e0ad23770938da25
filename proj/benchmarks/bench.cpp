// Smoke benchmarks for the hot paths: exact Laurent arithmetic, integer
// monodromy products, rational ray tracing, and the numeric leaf integrator.

#include <benchmark/benchmark.h>

#include "syzkit/catalog.hpp"
#include "syzkit/quad_diff.hpp"
#include "syzkit/tropical.hpp"
#include "syzkit/wallcross.hpp"

namespace {

using namespace syz;

void BM_LaurentMultiply(benchmark::State& state) {
  // Two dense-ish bivariate elements with energy coefficients.
  LaurentElement a(2), b(2);
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j) {
      a += LaurentElement::monomial({i, j}, EnergyScalar::monomial(i + 4, Rat(i + j + 7, 2)));
      b += LaurentElement::monomial({j, i}, EnergyScalar::monomial(j + 4, Rat(i - j + 7, 3)));
    }
  for (auto _ : state) {
    LaurentElement c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_LaurentMultiply);

void BM_MonodromyProduct(benchmark::State& state) {
  AffineBase base = catalog_base("res-e1");
  for (auto _ : state) {
    ConsistencyReport r = check_total_monodromy(base);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MonodromyProduct);

void BM_RayTraceDouble(benchmark::State& state) {
  DoubledBase d = catalog_double("k3-double");
  for (auto _ : state) {
    std::vector<Ray> rays = trace_all_rays(d);
    benchmark::DoNotOptimize(rays);
  }
}
BENCHMARK(BM_RayTraceDouble);

void BM_SeamCensus(benchmark::State& state) {
  DoubledBase d = catalog_double("sextic-double");
  for (auto _ : state) {
    SeamCensus c = seam_census(d);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SeamCensus);

void BM_LeafTrace(benchmark::State& state) {
  LeafScenario s = catalog_leaf_scenario("cp1");
  for (auto _ : state) {
    Trajectory t = trace_leaf(s.theta, s.starts[0], s.step, s.max_steps);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_LeafTrace);

void BM_WallTransport(benchmark::State& state) {
  WallScenario s = catalog_wall_scenario("blowup-wall");
  LaurentElement u = LaurentElement::monomial({1, 0}, EnergyScalar::one());
  std::vector<QVec2> path = {s.chambers[0].point, s.chambers[1].point};
  for (auto _ : state) {
    LaurentElement w = continue_superpotential(u, s.walls, path);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WallTransport);

}  // namespace

BENCHMARK_MAIN();
