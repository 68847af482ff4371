#include <benchmark/benchmark.h>

#include "qlgraph/product.hpp"
#include "qlgraph/ql_bit.hpp"

namespace {

std::vector<qlgraph::QLBit> bits(std::size_t q, std::size_t n) {
    std::vector<qlgraph::QLBit> out;
    for (std::size_t k = 0; k < q; ++k) {
        qlgraph::QLBitSpec s;
        s.n_per_subgraph = n;
        s.degree = 6;
        s.coupling_probability = 0.05;
        s.rng_seed = k + 1;
        s.name = std::string(1, static_cast<char>('a' + k));
        out.push_back(qlgraph::build_ql_bit(s));
    }
    return out;
}

void BM_CartesianProduct(benchmark::State& state) {
    const auto factors = bits(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qlgraph::cartesian_product(factors));
    }
}
BENCHMARK(BM_CartesianProduct)->Arg(10)->Arg(20)->Arg(40);

void BM_OptimizedProduct(benchmark::State& state) {
    const auto factors = bits(static_cast<std::size_t>(state.range(0)), 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qlgraph::optimized_product(factors, qlgraph::ProductLayout::independent, 7));
    }
}
BENCHMARK(BM_OptimizedProduct)->DenseRange(2, 6);

void BM_ComposeSpectrum(benchmark::State& state) {
    const auto factors = bits(2, static_cast<std::size_t>(state.range(0)));
    const auto a = qlgraph::eigendecompose(factors[0].graph);
    const auto b = qlgraph::eigendecompose(factors[1].graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qlgraph::compose_spectrum(a, b, false));
    }
}
BENCHMARK(BM_ComposeSpectrum)->Arg(20)->Arg(60);

}  // namespace
