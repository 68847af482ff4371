#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qlgraph {

using Complex = std::complex<double>;

/// Edge gains must sit on the unit circle to within this distance.
inline constexpr double kUnitTolerance = 1e-12;

/// Unordered vertex pair, always stored with lo < hi.
struct VertexPair {
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

VertexPair make_vertex_pair(std::size_t u, std::size_t v);

/// Simple undirected graph whose edges carry complex unit gains.
///
/// Each edge is stored once, keyed by (lo, hi), with the gain oriented lo -> hi.
/// The reverse orientation is the conjugate, so the adjacency matrix is
/// Hermitian by construction.
class GainGraph {
public:
    GainGraph() = default;
    explicit GainGraph(std::size_t n_vertices);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Adds u -- v with gain oriented u -> v. Rejects self-loops, duplicate
    /// edges, out-of-range vertices and non-unit gains.
    void add_edge(std::size_t u, std::size_t v, Complex gain = 1.0);
    /// Replaces the gain of an existing edge (oriented u -> v).
    void set_gain(std::size_t u, std::size_t v, Complex gain);
    void remove_edge(std::size_t u, std::size_t v);

    bool has_edge(std::size_t u, std::size_t v) const;
    /// Gain oriented u -> v; nullopt when there is no edge.
    std::optional<Complex> find_gain(std::size_t u, std::size_t v) const;
    Complex gain(std::size_t u, std::size_t v) const;

    const std::map<VertexPair, Complex>& edges() const noexcept { return edges_; }

    std::vector<std::size_t> degrees() const;
    std::vector<std::vector<std::size_t>> adjacency_lists() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    void set_label(std::size_t v, std::string label);
    /// Empty string for unlabeled graphs.
    const std::string& label(std::size_t v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const GainGraph&, const GainGraph&) = default;

private:
    void check_vertex(std::size_t v) const;

    std::size_t n_ = 0;
    std::map<VertexPair, Complex> edges_;
    std::vector<std::string> labels_;
};

/// A gain graph with a positive real weight on every edge. Entry (i, j) of the
/// adjacency matrix is weight * gain.
class WeightedGraph {
public:
    explicit WeightedGraph(GainGraph graph);

    const GainGraph& graph() const noexcept { return graph_; }
    double weight(std::size_t u, std::size_t v) const;
    void set_weight(std::size_t u, std::size_t v, double weight);
    void scale_all(double factor);
    /// Adds an edge to the underlying gain graph together with its weight.
    void add_edge(std::size_t u, std::size_t v, Complex gain, double weight);

    /// Adjacency entry oriented u -> v (zero when absent).
    Complex entry(std::size_t u, std::size_t v) const;
    const std::map<VertexPair, double>& weights() const noexcept { return weights_; }

private:
    GainGraph graph_;
    std::map<VertexPair, double> weights_;
};

/// Assignment of every vertex to one of a few named blocks (subgraphs).
struct BlockPartition {
    std::vector<std::size_t> block_of_vertex;
    std::vector<std::string> names;

    std::size_t block_count() const noexcept { return names.size(); }
    std::vector<std::vector<std::size_t>> members() const;

    /// Blocks in order of first appearance of each distinct vertex label.
    static BlockPartition from_labels(const GainGraph& g);
    static BlockPartition single_block(std::size_t n_vertices, std::string name = "all");
};

/// Dense Hermitian adjacency matrix; diagonal zero.
Eigen::MatrixXcd adjacency_matrix(const GainGraph& g);
Eigen::MatrixXcd adjacency_matrix(const WeightedGraph& g);

/// Multiplies every adjacency entry by `factor` (> 0).
WeightedGraph scale_edges(const GainGraph& g, double factor);

struct ComponentCensus {
    std::size_t count = 0;
    /// Component id per vertex, numbered by smallest member vertex.
    std::vector<std::size_t> component_of;

    std::vector<std::vector<std::size_t>> members() const;
};

/// Union-find component census; gains are ignored.
ComponentCensus connected_components(const GainGraph& g);

}  // namespace qlgraph
