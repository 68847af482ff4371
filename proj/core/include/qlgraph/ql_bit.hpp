#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

/// Construction parameters of a QL bit: two random d-regular subgraphs of
/// n vertices each, joined by Bernoulli coupling edges of bias `coupling_bias`.
struct QLBitSpec {
    std::size_t n_per_subgraph = 0;
    std::size_t degree = 0;
    Complex coupling_bias{1.0, 0.0};
    double coupling_probability = 0.2;
    std::uint64_t rng_seed = 0;
    /// Subgraph labels become name + "1" and name + "2".
    std::string name = "a";

    /// Throws ValidationError unless d < n, n*d even, |c| = 1, p in (0, 1]
    /// and the expected cross degree p*n stays below d.
    void validate() const;

    friend bool operator==(const QLBitSpec&, const QLBitSpec&) = default;
};

struct QLBit {
    GainGraph graph;
    /// Vertex lists of subgraph 1 (indices [0, n)) and subgraph 2 ([n, 2n)).
    std::array<std::vector<std::size_t>, 2> partition;
    QLBitSpec spec;
    /// Vertices that ended up with no coupling edge at all (a warning, not an error).
    std::size_t uncoupled_vertices = 0;

    bool has_uncoupled_vertices() const noexcept { return uncoupled_vertices > 0; }
    std::size_t coupling_edge_count() const;
    BlockPartition blocks() const;
};

QLBit build_ql_bit(const QLBitSpec& spec);

}  // namespace qlgraph
