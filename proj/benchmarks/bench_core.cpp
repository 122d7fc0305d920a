#include <benchmark/benchmark.h>

#include "ppc/classify.hpp"
#include "ppc/minorcond.hpp"
#include "ppc/ppcons.hpp"
#include "ppc/rect.hpp"

namespace {

// Indicator construction plus search for a cyclic condition on a cycle.
void BM_CyclicOnCycle(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::size_t>(state.range(1));
  const ppc::Digraph h = ppc::cycle(q);
  const ppc::MinorCondition cond = ppc::cyclic_condition(p);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::satisfies(h, cond).satisfied);
}
BENCHMARK(BM_CyclicOnCycle)->Args({5, 7})->Args({7, 7})->Args({7, 5})->Unit(benchmark::kMillisecond);

void BM_Indicator(benchmark::State& state) {
  const ppc::Digraph h = ppc::cycle(static_cast<std::size_t>(state.range(0)));
  const ppc::MinorCondition cond = ppc::cyclic_condition(5);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::indicator(h, cond).graph.size());
}
BENCHMARK(BM_Indicator)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TotalRectangularity(benchmark::State& state) {
  const ppc::Digraph g = ppc::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ppc::is_totally_rectangular(g).passes());
}
BENCHMARK(BM_TotalRectangularity)->Arg(16)->Arg(64)->Arg(200);

void BM_PathConstruction(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ppc::construct_path_formula(k).construction.power);
}
BENCHMARK(BM_PathConstruction)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_CoreOfCycleUnion(benchmark::State& state) {
  std::vector<ppc::Digraph> parts;
  for (std::size_t i = 0; i < static_cast<std::size_t>(state.range(0)); ++i)
    parts.push_back(ppc::cycle(6 + i % 3));
  const ppc::Digraph g = ppc::disjoint_union(parts);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::core_of(g).core.size());
}
BENCHMARK(BM_CoreOfCycleUnion)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ClassifyClique(benchmark::State& state) {
  const ppc::Digraph g = ppc::clique(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ppc::classify(g).verdict);
}
BENCHMARK(BM_ClassifyClique)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
