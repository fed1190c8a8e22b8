#include <benchmark/benchmark.h>

#include "qrep/census.hpp"
#include "qrep/corpus.hpp"
#include "qrep/roots.hpp"

using namespace qrep;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_RootScan(benchmark::State& state) {
    Quiver q = preset("T7,3,2");
    for (auto _ : state) benchmark::DoNotOptimize(positive_roots_up_to_height(q, 14, exec_of(state)));
}
BENCHMARK(BM_RootScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_CensusSum(benchmark::State& state) {
    Quiver q = preset("tE8");
    CensusConfig cfg;
    cfg.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(e_split(q, 7, cfg));
}
BENCHMARK(BM_CensusSum)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_CorpusVerify(benchmark::State& state) {
    CensusConfig cfg;
    cfg.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(corpus_verify(6, OrientationMode::one_per_tree, cfg));
}
BENCHMARK(BM_CorpusVerify)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
