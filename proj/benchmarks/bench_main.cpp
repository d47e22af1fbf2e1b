#include <benchmark/benchmark.h>

#include "c4count/canonical.hpp"
#include "c4count/certify.hpp"
#include "c4count/corpus.hpp"
#include "c4count/harness.hpp"
#include "c4count/homcount.hpp"
#include "c4count/polarity.hpp"

namespace c4count {
namespace {

void BM_BuildPolarity(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_polarity(q));
}
BENCHMARK(BM_BuildPolarity)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_HomC5(benchmark::State& state) {
  Graph g = build_polarity(static_cast<int>(state.range(0))).loopless;
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(graphs::cycle(5), g));
}
BENCHMARK(BM_HomC5)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_HomWeightedPetersen(benchmark::State& state) {
  Graph g = build_polarity(static_cast<int>(state.range(0))).loopless;
  ScaledHost host = ScaledHost::sparse(g, Rational(1, 2));
  VertexWeights ones = VertexWeights::ones(10, g.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(hom_weighted(graphs::petersen(), host, ones).value);
}
BENCHMARK(BM_HomWeightedPetersen)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HomSubdividedClique(benchmark::State& state) {
  Graph g = build_polarity(static_cast<int>(state.range(0))).loopless;
  for (auto _ : state) benchmark::DoNotOptimize(hom_subdivided_clique(5, g));
}
BENCHMARK(BM_HomSubdividedClique)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? graphs::petersen() : graphs::dodecahedron();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_SearchTameSequence(benchmark::State& state) {
  Graph g = graphs::tame_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_tame(g).nodes);
}
BENCHMARK(BM_SearchTameSequence)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SearchCountable(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? graphs::c5pair_extended() : graphs::cycle(12);
  for (auto _ : state) benchmark::DoNotOptimize(search_countable(g).nodes);
}
BENCHMARK(BM_SearchCountable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiscrepancySpectral(benchmark::State& state) {
  Graph g = build_polarity(static_cast<int>(state.range(0))).loopless;
  for (auto _ : state) benchmark::DoNotOptimize(discrepancy_spectral(g).delta_up);
}
BENCHMARK(BM_DiscrepancySpectral)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace c4count

BENCHMARK_MAIN();
