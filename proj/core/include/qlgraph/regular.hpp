#pragma once

#include <cstddef>
#include <cstdint>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

inline constexpr int kMaxRegularRestarts = 1000;

/// Random simple d-regular graph on n vertices with all gains 1.
///
/// Stubs are paired at random; colliding pairs (self-loops, repeated edges) are
/// returned to the pool and re-paired, and the whole pairing restarts when the
/// leftover stubs admit no valid pair. Deterministic for a fixed seed.
/// Throws ValidationError when d >= n or n*d is odd, NumericalError after
/// kMaxRegularRestarts failed pairings.
GainGraph generate_d_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// True when every vertex has exactly degree d.
bool is_regular(const GainGraph& g, std::size_t d);

}  // namespace qlgraph
