#include <benchmark/benchmark.h>

#include "centlab/enumeration.hpp"

namespace {

using namespace centlab;

void BM_EnumerateLabeled(benchmark::State &state) {
    const auto n = static_cast<NodeId>(state.range(0));
    for (auto _ : state) {
        GraphEnumerator stream(n, false);
        std::uint64_t count = 0;
        while (stream.next()) {
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateLabeled)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateDedup(benchmark::State &state) {
    const auto n = static_cast<NodeId>(state.range(0));
    for (auto _ : state) {
        GraphEnumerator stream(n, true);
        std::uint64_t count = 0;
        while (stream.next()) {
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateDedup)->Arg(4)->Arg(5)->Arg(6);

void BM_CanonicalMask(benchmark::State &state) {
    const Graph g = graph_from_mask(7, 0x155555);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_mask(g));
    }
}
BENCHMARK(BM_CanonicalMask);

} // namespace
