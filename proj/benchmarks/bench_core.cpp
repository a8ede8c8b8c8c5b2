#include <benchmark/benchmark.h>

#include <random>

#include "lelong/logsupport.hpp"
#include "lelong/polytope.hpp"
#include "lelong/regularize.hpp"

using namespace lelong;

namespace {

Polytope ex12() { return make_polytope(2, {{1, 0}, {0, 1}, {3, 1}}); }

Polytope random_polytope(int n, int gens, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<Vec> g(static_cast<std::size_t>(gens), Vec(static_cast<std::size_t>(n)));
  for (auto& v : g)
    for (auto& x : v) x = u(rng);
  return make_polytope(n, g);
}

void BM_Support(benchmark::State& state) {
  const auto p = random_polytope(static_cast<int>(state.range(0)), 32, 1);
  const Vec xi(static_cast<std::size_t>(state.range(0)), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(support(p, xi));
}
BENCHMARK(BM_Support)->Arg(2)->Arg(3)->Arg(6);

void BM_IsLower(benchmark::State& state) {
  const auto p = random_polytope(static_cast<int>(state.range(0)), 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_lower(p));
}
BENCHMARK(BM_IsLower)->Arg(2)->Arg(3);

void BM_HsOnHyperplane(benchmark::State& state) {
  const auto p = ex12();
  const CPoint z({2.0, kNegInf});
  for (auto _ : state) benchmark::DoNotOptimize(hs(p, z));
}
BENCHMARK(BM_HsOnHyperplane);

void BM_InfConvA(benchmark::State& state) {
  const HsFunction h(ex12());
  const auto mu = DistanceFn::euclidean(2);
  const CPoint z({std::log(1e4), kNegInf});
  for (auto _ : state) benchmark::DoNotOptimize(inf_conv_a(h, mu, 0.5, z));
}
BENCHMARK(BM_InfConvA)->Unit(benchmark::kMillisecond);

void BM_IntConvC(benchmark::State& state) {
  const HsFunction h(simplex(2));
  const Kernel k(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const CPoint z({0.3, -0.2}, {1.0, 2.0});
  for (auto _ : state) benchmark::DoNotOptimize(int_conv_c(h, 0.25, z, k));
}
BENCHMARK(BM_IntConvC)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
