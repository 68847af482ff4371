#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlgraph/gain_graph.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/spectral.hpp"

namespace qlgraph {

inline constexpr std::size_t kMaxProductVertices = 200000;

/// One factor of a product: a graph with its block (subgraph) assignment.
struct ProductFactor {
    GainGraph graph;
    BlockPartition blocks;
    std::string name;

    static ProductFactor from_bit(const QLBit& bit);
    /// Blocks are taken from the vertex labels (one block when unlabeled).
    static ProductFactor from_graph(const GainGraph& g, std::string name = "");
};

/// A product graph whose vertices carry a block code: the tuple of factor block
/// indices written in mixed radix, leftmost factor slowest.
struct ProductGraph {
    GainGraph graph;
    std::size_t q = 0;
    std::vector<std::string> factor_names;
    /// Block names per factor, e.g. {"a1", "a2"}.
    std::vector<std::vector<std::string>> block_names;
    std::vector<std::size_t> block_of_vertex;
    /// Vertex count per factor for a full Cartesian product; empty for
    /// optimized and contracted products, whose vertices are not tuples.
    std::vector<std::size_t> factor_sizes;
    std::vector<QLBitSpec> factor_specs;

    std::size_t block_count() const;
    std::size_t block_radix(std::size_t factor) const { return block_names.at(factor).size(); }
    std::vector<std::size_t> decode_block(std::size_t code) const;
    std::size_t encode_block(const std::vector<std::size_t>& tuple) const;
    /// Concatenated block names, e.g. "a1b2".
    std::string block_label(std::size_t code) const;
    /// Number of factor positions in which two block codes differ.
    std::size_t block_distance(std::size_t x, std::size_t y) const;
    BlockPartition blocks() const;
    /// Factor coordinates of a vertex of a full product.
    std::vector<std::size_t> vertex_tuple(std::size_t v) const;
};

/// Definition-level Cartesian product: (u, x) ~ (v, x) for u ~ v in G and
/// (u, x) ~ (u, y) for x ~ y in H, gains inherited. Vertex (u, x) has index
/// u * |H| + x. Throws ValidationError above kMaxProductVertices.
ProductGraph cartesian_product(const std::vector<ProductFactor>& factors);
ProductGraph cartesian_product(const GainGraph& g, const GainGraph& h);
ProductGraph cartesian_product(const std::vector<QLBit>& bits);

/// Edges whose endpoints violate the product edge rule. For a full product,
/// the vertex tuples must differ in exactly one coordinate; otherwise the block
/// codes may differ in at most one position.
std::vector<VertexPair> edge_rule_violations(const ProductGraph& p);

/// Eigenvalues lambda_i + mu_j with eigenvectors X_i (x) Y_j, sorted descending.
Spectrum compose_spectrum(const Spectrum& g, const Spectrum& h, bool with_vectors = true);

/// Emergent state of the product of `bits`, assembled from the factors: the
/// projection is the tensor product of the factor projections and the
/// eigenvalue the sum of factor eigenvalues. The full vector is only built when
/// it has at most kMaxProductVertices entries.
EmergentState emergent_product_state(const std::vector<QLBit>& bits);

/// (2^(2q) - (q + 1) 2^q) / 2, for 1 <= q <= 31.
std::uint64_t zero_coupling_block_count(std::size_t q);
/// Pairs of block codes differing in at least two positions, by enumeration.
std::uint64_t enumerate_zero_coupling_blocks(std::size_t q);

enum class ProductLayout {
    /// Every block gets its own random d-regular graph and every coupled block
    /// pair its own Bernoulli coupling pattern.
    independent,
    /// All blocks share one d-regular graph and each factor one symmetric
    /// coupling pattern, so the construction is exactly a sum of tensor terms.
    tensor,
};

/// n * 2^q vertex product: 2^q blocks of n vertices, coupling only between
/// blocks whose codes differ in one factor, using that factor's bias and
/// probability, oriented from its subgraph 1 to subgraph 2. All bits must
/// share n and d.
ProductGraph optimized_product(const std::vector<QLBit>& bits, ProductLayout layout, std::uint64_t seed);

struct QuotientGraph {
    std::size_t node_count = 0;
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    GainGraph to_graph() const;
};

/// One node per block, an edge wherever some edge joins the two blocks.
QuotientGraph quotient(const ProductGraph& p);
QuotientGraph quotient(const GainGraph& g, const BlockPartition& blocks);

struct HypercubeCertificate {
    bool is_hypercube = false;
    /// Bit label of each node; present when is_hypercube.
    std::vector<std::uint32_t> label_of_node;
    std::string reason;
};

/// Decides whether `qg` is isomorphic to Q_q. Tries the node indices as labels
/// first, then a breadth-first labeling from node 0.
HypercubeCertificate hypercube_check(const QuotientGraph& qg, std::size_t q);
HypercubeCertificate hypercube_check(const GainGraph& g, std::size_t q);

/// Merges every set of `sets` into a single vertex (numbered by the smallest
/// member). Sets must be equal-sized, disjoint, cover all vertices and stay
/// within one label class. Parallel edges between different blocks merge into
/// one edge whose gain is their normalized sum; a block whose contracted
/// intra-block graph is not `target_degree`-regular is replaced by a fresh
/// random one.
GainGraph contract_subgraph(const GainGraph& g, const std::vector<std::vector<std::size_t>>& sets,
                            std::size_t target_degree, std::uint64_t seed);

/// Contracts a full product by grouping each vertex by its first factor
/// coordinate, leaving n * 2^q vertices.
ProductGraph contract_product(const ProductGraph& full, std::size_t target_degree, std::uint64_t seed);

/// block (Cartesian) fresh d-regular graph of the same order: a 2d-regular
/// graph on n^2 vertices when the block is d-regular.
GainGraph lift_contracted_block(const GainGraph& block, std::size_t d, std::uint64_t seed);

/// The intra-block subgraph of `block` in `g`, vertices renumbered in order.
GainGraph induced_block(const GainGraph& g, const BlockPartition& blocks, std::size_t block);

}  // namespace qlgraph
