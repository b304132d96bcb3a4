#include <benchmark/benchmark.h>

#include "centlab/axioms.hpp"
#include "centlab/enumeration.hpp"
#include "centlab/measures.hpp"
#include "centlab/search.hpp"

namespace {

using namespace centlab;

void BM_AxiomSuiteN4(benchmark::State &state) {
    const auto registry = measure_registry();
    const auto graphs = enumerate_graphs(4, false);
    SuiteConfig config;
    config.check.isomorphism.exhaustive = true;
    for (auto _ : state) {
        for (const auto &m : registry) {
            benchmark::DoNotOptimize(run_axiom_suite(m, graphs, config));
        }
    }
}
BENCHMARK(BM_AxiomSuiteN4);

void BM_FindCounterexample(benchmark::State &state) {
    const auto registry = measure_registry();
    const auto &betweenness = find_measure(registry, "betweenness");
    SearchBudget budget;
    budget.n_max = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            find_counterexample(betweenness, AxiomId::edge_monotonicity, budget));
    }
}
BENCHMARK(BM_FindCounterexample);

} // namespace
