#include <benchmark/benchmark.h>

#include "qlgraph/kuramoto.hpp"
#include "qlgraph/ql_bit.hpp"

namespace {

void BM_PairwiseStep(benchmark::State& state) {
    qlgraph::QLBitSpec s;
    s.n_per_subgraph = static_cast<std::size_t>(state.range(0));
    s.degree = 8;
    s.coupling_probability = 4.0 / static_cast<double>(s.n_per_subgraph);
    s.rng_seed = 2;
    const auto bit = qlgraph::build_ql_bit(s);
    auto e = qlgraph::random_ensemble(bit.graph.vertex_count(), 5.0, 3);
    for (auto _ : state) {
        e = qlgraph::step_pairwise(e, bit.graph, 0.01);
        benchmark::DoNotOptimize(e.thetas.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bit.graph.edge_count()));
}
BENCHMARK(BM_PairwiseStep)->RangeMultiplier(4)->Range(30, 1920);

void BM_SimulateToPlateau(benchmark::State& state) {
    qlgraph::QLBitSpec s;
    s.n_per_subgraph = 30;
    s.degree = 8;
    s.coupling_probability = 0.2;
    s.rng_seed = 3;
    const auto bit = qlgraph::build_ql_bit(s);
    qlgraph::SimConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qlgraph::simulate(qlgraph::random_ensemble(60, 5.0, 4), bit.graph, bit.blocks(), cfg));
    }
}
BENCHMARK(BM_SimulateToPlateau)->Unit(benchmark::kMillisecond);

}  // namespace
