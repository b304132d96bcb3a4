#include <benchmark/benchmark.h>

#include "centlab/enumeration.hpp"
#include "centlab/graph.hpp"
#include "centlab/measures.hpp"

namespace {

using namespace centlab;

Graph ring_with_chords(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        if (v + 3 < n) {
            edges.emplace_back(v, v + 3);
        }
    }
    return Graph(n, edges);
}

void BM_Betweenness(benchmark::State &state) {
    const Graph g = ring_with_chords(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness_centrality(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_BetweennessOracle(benchmark::State &state) {
    const Graph g = ring_with_chords(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness_oracle(g));
    }
}
BENCHMARK(BM_BetweennessOracle);

void BM_DecayingDegree(benchmark::State &state) {
    const Graph g = ring_with_chords(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decaying_degree_centrality(g));
    }
}
BENCHMARK(BM_DecayingDegree)->Arg(16)->Arg(64);

void BM_Eigenvector(benchmark::State &state) {
    const Graph g = ring_with_chords(static_cast<NodeId>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvector_centrality(g));
    }
}
BENCHMARK(BM_Eigenvector)->Arg(16)->Arg(64)->Arg(256);

} // namespace
