#include "tuza/clique_decomp.hpp"
#include "tuza/constructions.hpp"
#include "tuza/graph_classes.hpp"
#include "tuza/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace tuza;

static void BM_EnumerateTriangles(benchmark::State& state)
{
    const auto g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triangles(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateTriangles)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

static void BM_ExactMuClique(benchmark::State& state)
{
    const auto g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_mu(g).value);
}
BENCHMARK(BM_ExactMuClique)->DenseRange(8, 13)->Unit(benchmark::kMillisecond);

static void BM_ExactTauClique(benchmark::State& state)
{
    const auto g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_tau(g).value);
}
BENCHMARK(BM_ExactTauClique)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_ThresholdSweep(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (auto [g, r] : enumerate_threshold(n))
            benchmark::DoNotOptimize(threshold_construct(normalize_threshold(r)).packing.size());
}
BENCHMARK(BM_ThresholdSweep)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_CochainConstruct(benchmark::State& state)
{
    const int ell = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto [g, r] = sample_cochain(ell, seed++);
        benchmark::DoNotOptimize(cochain_construct(r).packing.size());
    }
}
BENCHMARK(BM_CochainConstruct)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_MaxCliquePacking(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_clique_packing(n).triangles.size());
}
BENCHMARK(BM_MaxCliquePacking)->Arg(49)->Arg(50)->Arg(51)->Arg(64)->Arg(65)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
