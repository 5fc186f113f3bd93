#include <benchmark/benchmark.h>

#include <map>

#include "degpart/block_cut.hpp"
#include "degpart/degeneracy.hpp"
#include "degpart/forest_partition.hpp"
#include "degpart/generators.hpp"
#include "degpart/graph.hpp"

namespace {

using namespace degpart;

const Graph& cached_regular(int n, int k) {
    static std::map<std::pair<int, int>, Graph> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, random_regular(n, k, 12345)).first;
    return it->second;
}

void BM_DegeneracyOrdering(benchmark::State& state) {
    const Graph& g = cached_regular(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto res = degeneracy_ordering(g);
        benchmark::DoNotOptimize(res.degeneracy);
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_DegeneracyOrdering)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

void BM_BlockCutTree(benchmark::State& state) {
    const Graph& g = cached_regular(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto d = block_cut_tree(g);
        benchmark::DoNotOptimize(d.blocks.size());
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_BlockCutTree)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

void BM_ForestPartition(benchmark::State& state) {
    const Graph& g = cached_regular(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        Partition part = degenerate_partition(g, PartitionSpec{{1, 0}});
        benchmark::DoNotOptimize(part.class_of.data());
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_ForestPartition)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16)->Arg(1 << 18);

void BM_ValidatePartition(benchmark::State& state) {
    const Graph& g = cached_regular(static_cast<int>(state.range(0)), 3);
    Partition part = degenerate_partition(g, PartitionSpec{{1, 0}});
    for (auto _ : state) {
        auto report = validate_partition(g, part);
        benchmark::DoNotOptimize(report.ok);
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_ValidatePartition)->Arg(1 << 14)->Arg(1 << 16);

} // namespace

BENCHMARK_MAIN();
