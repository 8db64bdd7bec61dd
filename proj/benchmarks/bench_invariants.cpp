#include <benchmark/benchmark.h>

#include "resgraph/blowup.hpp"
#include "resgraph/catalog.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/elliptic.hpp"
#include "resgraph/lattice.hpp"

using namespace resgraph;

namespace {

void BM_NegativeDefinite(benchmark::State& state) {
  auto doc = catalog_graph("E8");
  for (auto _ : state) {
    DualGraph g(doc.graph->vertices(), doc.graph->edges());
    benchmark::DoNotOptimize(g.is_negative_definite());
  }
}
BENCHMARK(BM_NegativeDefinite);

void BM_FundamentalCycleE8(benchmark::State& state) {
  auto doc = catalog_graph("E8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_cycle(*doc.graph));
  }
}
BENCHMARK(BM_FundamentalCycleE8);

void BM_CanonicalCycleE8(benchmark::State& state) {
  auto doc = catalog_graph("E8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_cycle(*doc.graph));
  }
}
BENCHMARK(BM_CanonicalCycleE8);

void BM_EnumerateBox(benchmark::State& state) {
  auto doc = catalog_graph("E8");
  const Cycle bound = fundamental_cycle(*doc.graph);
  long cycles = 0;
  for (auto _ : state) {
    CycleStream stream(*doc.graph, bound);
    while (stream.advance()) ++cycles;
  }
  state.SetItemsProcessed(cycles);
}
BENCHMARK(BM_EnumerateBox);

void BM_OracleMinimalAntiNef(benchmark::State& state) {
  auto doc = catalog_graph("laufer-chain");
  const SupportSet all = SupportSet::full(*doc.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_minimal_anti_nef(*doc.graph, all, state.range(0)));
  }
}
BENCHMARK(BM_OracleMinimalAntiNef)->Arg(2)->Arg(6);

void BM_Classify(benchmark::State& state) {
  auto doc = catalog_graph("laufer-chain");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(*doc.graph));
  }
}
BENCHMARK(BM_Classify);

void BM_EllipticSequence(benchmark::State& state) {
  auto doc = catalog_graph("laufer-chain");
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_sequence(*doc.graph));
  }
}
BENCHMARK(BM_EllipticSequence);

void BM_BlowupPullback(benchmark::State& state) {
  auto doc = catalog_graph("laufer-chain");
  const Cycle z = fundamental_cycle(*doc.graph);
  for (auto _ : state) {
    BlowupRecord record = blow_up(*doc.graph, BlowupCenter::free_point("E0"));
    benchmark::DoNotOptimize(pullback(record, z));
  }
}
BENCHMARK(BM_BlowupPullback);

}  // namespace

BENCHMARK_MAIN();
