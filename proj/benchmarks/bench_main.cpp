#include <benchmark/benchmark.h>

#include "holgraph/catalog.hpp"
#include "holgraph/normgraph.hpp"
#include "holgraph/oracle.hpp"

using namespace holgraph;

static void BM_GeometricSum(benchmark::State& state) {
  const Modulus mod(2, static_cast<unsigned>(state.range(0)));
  const UnitAut five(mod, 5);
  u64 k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_sum(five, k).value());
    k = k * 3 + 1;
  }
}
BENCHMARK(BM_GeometricSum)->Arg(8)->Arg(32)->Arg(60);

static void BM_ValidateExhaustive(benchmark::State& state) {
  const auto gamma = labeled_gamma(SubgroupLabel::parse("G5", 2, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(validate_exhaustive(gamma));
  state.SetComplexityN(gamma.modulus().value());
}
BENCHMARK(BM_ValidateExhaustive)->DenseRange(4, 10, 2)->Complexity(benchmark::oNSquared);

// One graph per iteration; range is n with p = 2.
static void BM_BuildGraph(benchmark::State& state) {
  const auto engine = static_cast<Engine>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(2, n, engine, 1).edges.size());
}
BENCHMARK(BM_BuildGraph)
    ->ArgsProduct({{static_cast<int>(Engine::ClosedForm)}, {5, 8, 10}})
    ->ArgsProduct({{static_cast<int>(Engine::Modular), static_cast<int>(Engine::General)}, {5, 6}})
    ->Unit(benchmark::kMillisecond);

static void BM_ModularPair(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto a = labeled_gamma(SubgroupLabel::parse("G5", 2, n));
  const auto b = labeled_gamma(SubgroupLabel::parse("G6", 2, n));
  for (auto _ : state) benchmark::DoNotOptimize(mutually_normalize_mod(a, b));
}
BENCHMARK(BM_ModularPair)->DenseRange(4, 10, 2);

static void BM_OracleEnumerate(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_subgroups(2, n, 2, 1).size());
}
BENCHMARK(BM_OracleEnumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
