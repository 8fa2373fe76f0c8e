#include <map>

#include <benchmark/benchmark.h>

#include "perm/generators.hpp"
#include "perm/maxperm.hpp"
#include "perm/scoring.hpp"

namespace {

const perm::GeneratedGraph& planted(std::size_t blocks) {
    static std::map<std::size_t, perm::GeneratedGraph> cache;
    auto it = cache.find(blocks);
    if (it == cache.end())
        it = cache.emplace(blocks, perm::generate(perm::PlantedPartition{blocks, 50, 0.3, 0.01, 7})).first;
    return it->second;
}

void BM_PermanenceSerial(benchmark::State& state) {
    const auto& g = planted(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perm::serial::graph_permanence(g.graph, g.truth));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.graph.vertex_count()));
}

void BM_PermanenceParallel(benchmark::State& state) {
    const auto& g = planted(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perm::graph_permanence(g.graph, g.truth));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.graph.vertex_count()));
}

void BM_DetectNaive(benchmark::State& state) {
    const auto& g = planted(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perm::detect(g.graph, {}).permanence);
}

void BM_DetectCached(benchmark::State& state) {
    const auto& g = planted(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perm::detect_with_cache(g.graph, {}).permanence);
}

} // namespace

BENCHMARK(BM_PermanenceSerial)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_PermanenceParallel)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_DetectNaive)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetectCached)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
