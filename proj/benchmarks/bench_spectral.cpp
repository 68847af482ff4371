#include <benchmark/benchmark.h>

#include "qlgraph/ql_bit.hpp"
#include "qlgraph/spectral.hpp"

namespace {

qlgraph::QLBit bench_bit(std::size_t n, std::size_t d) {
    qlgraph::QLBitSpec s;
    s.n_per_subgraph = n;
    s.degree = d;
    s.coupling_probability = 4.0 / static_cast<double>(n);
    s.rng_seed = 1;
    return qlgraph::build_ql_bit(s);
}

void BM_Eigendecompose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto bit = bench_bit(n, 8);
    const auto a = qlgraph::adjacency_matrix(bit.graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qlgraph::eigendecompose(a));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(2 * n));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_BuildQLBit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bench_bit(n, 8));
    }
}
BENCHMARK(BM_BuildQLBit)->RangeMultiplier(4)->Range(32, 2048);

}  // namespace
