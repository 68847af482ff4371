#pragma once

#include <cstdint>
#include <random>

namespace qlgraph {

using Rng = std::mt19937_64;

/// Independent, reproducible stream `stream` derived from a user seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

/// Derives a child seed; used to hand distinct seeds to sub-constructions.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    auto rng = make_rng(seed, stream ^ 0x9e3779b97f4a7c15ULL);
    return rng();
}

}  // namespace qlgraph
