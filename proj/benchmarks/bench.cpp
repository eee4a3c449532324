#include <benchmark/benchmark.h>

#include "statikit/statify.hpp"
#include "statikit/tropical_pic.hpp"

using namespace statikit;

namespace {

ModuleVector monomial(std::size_t n, Exponent e, long c = 1) { return ModuleVector::monomial(n, 1, 0, e, c); }

ModulePresentation example1() {
  return {SmoothChart::standard(2), 1, {monomial(2, {2, 0}), monomial(2, {0, 2})}};
}

ModulePresentation example2() {
  return {SmoothChart::standard(3),
          1,
          {monomial(3, {3, 0, 1}) - monomial(3, {1, 2, 1}), monomial(3, {1, 3, 0}) - monomial(3, {1, 1, 2}),
           monomial(3, {0, 1, 3}) - monomial(3, {2, 1, 1})}};
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

static void BM_StatifyExample1(benchmark::State& state) {
  auto M = example1();
  for (auto _ : state) benchmark::DoNotOptimize(compute_statification(M));
}
BENCHMARK(BM_StatifyExample1)->Unit(benchmark::kMillisecond);

static void BM_StatifyExample2(benchmark::State& state) {
  auto M = example2();
  for (auto _ : state) benchmark::DoNotOptimize(compute_statification(M));
}
BENCHMARK(BM_StatifyExample2)->Unit(benchmark::kMillisecond);

static void BM_Replay(benchmark::State& state) {
  auto cert = compute_statification(example2(), {true, false});
  for (auto _ : state) benchmark::DoNotOptimize(replay(cert));
}
BENCHMARK(BM_Replay)->Unit(benchmark::kMillisecond);

static void BM_Syzygies(benchmark::State& state) {
  auto M = example2();
  for (auto _ : state) benchmark::DoNotOptimize(syzygies(M.columns, 3, 1));
}
BENCHMARK(BM_Syzygies)->Unit(benchmark::kMicrosecond);

static void BM_KoszulFullFace(benchmark::State& state) {
  auto M = example2();
  for (auto _ : state) benchmark::DoNotOptimize(koszul_tor(M, {0, 1, 2}, 2));
}
BENCHMARK(BM_KoszulFullFace)->Unit(benchmark::kMicrosecond);

static void BM_StarSubdivisionChain(benchmark::State& state) {
  for (auto _ : state) {
    auto f = Fan::of_cone(RationalCone::orthant(3));
    for (long k = 1; k <= state.range(0); ++k) f = star_subdivision(f, make_int_vector({k, 1, 1}));
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_StarSubdivisionChain)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_JacobianCycle(benchmark::State& state) {
  auto g = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_group(g));
}
BENCHMARK(BM_JacobianCycle)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

static void BM_ReducedDivisorComplete(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto g = complete(n);
  IntVector d(n, 0);
  d[n - 1] = 10 * static_cast<long>(n);
  d[1] = -3;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_divisor(g, d));
}
BENCHMARK(BM_ReducedDivisorComplete)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
