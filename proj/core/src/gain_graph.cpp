#include "qlgraph/gain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qlgraph/errors.hpp"

namespace qlgraph {

namespace {

void check_unit(Complex gain) {
    if (!std::isfinite(gain.real()) || !std::isfinite(gain.imag()) ||
        std::abs(std::abs(gain) - 1.0) >= kUnitTolerance) {
        std::ostringstream msg;
        msg << "edge gain " << gain << " is not a complex unit (|z| = " << std::abs(gain) << ")";
        throw ValidationError(msg.str());
    }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

VertexPair make_vertex_pair(std::size_t u, std::size_t v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

GainGraph::GainGraph(std::size_t n_vertices) : n_(n_vertices) {}

void GainGraph::check_vertex(std::size_t v) const {
    if (v >= n_) {
        throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n_) + ")");
    }
}

void GainGraph::add_edge(std::size_t u, std::size_t v, Complex gain) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    check_unit(gain);
    auto key = make_vertex_pair(u, v);
    auto stored = u < v ? gain : std::conj(gain);
    auto [it, inserted] = edges_.emplace(key, stored);
    if (!inserted) {
        throw ValidationError("duplicate edge " + std::to_string(key.lo) + " -- " +
                              std::to_string(key.hi));
    }
}

void GainGraph::set_gain(std::size_t u, std::size_t v, Complex gain) {
    check_unit(gain);
    auto it = edges_.find(make_vertex_pair(u, v));
    if (it == edges_.end()) {
        throw ValidationError("no edge " + std::to_string(u) + " -- " + std::to_string(v));
    }
    it->second = u < v ? gain : std::conj(gain);
}

void GainGraph::remove_edge(std::size_t u, std::size_t v) {
    if (edges_.erase(make_vertex_pair(u, v)) == 0) {
        throw ValidationError("no edge " + std::to_string(u) + " -- " + std::to_string(v));
    }
}

bool GainGraph::has_edge(std::size_t u, std::size_t v) const {
    return u != v && edges_.contains(make_vertex_pair(u, v));
}

std::optional<Complex> GainGraph::find_gain(std::size_t u, std::size_t v) const {
    if (u == v) {
        return std::nullopt;
    }
    auto it = edges_.find(make_vertex_pair(u, v));
    if (it == edges_.end()) {
        return std::nullopt;
    }
    return u < v ? it->second : std::conj(it->second);
}

Complex GainGraph::gain(std::size_t u, std::size_t v) const {
    auto g = find_gain(u, v);
    if (!g) {
        throw ValidationError("no edge " + std::to_string(u) + " -- " + std::to_string(v));
    }
    return *g;
}

std::vector<std::size_t> GainGraph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& [key, gain] : edges_) {
        ++deg[key.lo];
        ++deg[key.hi];
    }
    return deg;
}

std::vector<std::vector<std::size_t>> GainGraph::adjacency_lists() const {
    std::vector<std::vector<std::size_t>> adj(n_);
    for (const auto& [key, gain] : edges_) {
        adj[key.lo].push_back(key.hi);
        adj[key.hi].push_back(key.lo);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
    }
    return adj;
}

void GainGraph::set_label(std::size_t v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) {
        labels_.resize(n_);
    }
    labels_[v] = std::move(label);
}

const std::string& GainGraph::label(std::size_t v) const {
    static const std::string empty;
    check_vertex(v);
    return labels_.empty() ? empty : labels_[v];
}

WeightedGraph::WeightedGraph(GainGraph graph) : graph_(std::move(graph)) {
    for (const auto& [key, gain] : graph_.edges()) {
        weights_.emplace(key, 1.0);
    }
}

double WeightedGraph::weight(std::size_t u, std::size_t v) const {
    auto it = weights_.find(make_vertex_pair(u, v));
    if (it == weights_.end()) {
        throw ValidationError("no edge " + std::to_string(u) + " -- " + std::to_string(v));
    }
    return it->second;
}

void WeightedGraph::set_weight(std::size_t u, std::size_t v, double weight) {
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw ValidationError("edge weights must be positive and finite");
    }
    auto it = weights_.find(make_vertex_pair(u, v));
    if (it == weights_.end()) {
        throw ValidationError("no edge " + std::to_string(u) + " -- " + std::to_string(v));
    }
    it->second = weight;
}

void WeightedGraph::scale_all(double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw ValidationError("scale factor must be positive and finite");
    }
    for (auto& [key, w] : weights_) {
        w *= factor;
    }
}

void WeightedGraph::add_edge(std::size_t u, std::size_t v, Complex gain, double weight) {
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw ValidationError("edge weights must be positive and finite");
    }
    graph_.add_edge(u, v, gain);
    weights_.emplace(make_vertex_pair(u, v), weight);
}

Complex WeightedGraph::entry(std::size_t u, std::size_t v) const {
    auto g = graph_.find_gain(u, v);
    if (!g) {
        return 0.0;
    }
    return weights_.at(make_vertex_pair(u, v)) * *g;
}

std::vector<std::vector<std::size_t>> BlockPartition::members() const {
    std::vector<std::vector<std::size_t>> out(block_count());
    for (std::size_t v = 0; v < block_of_vertex.size(); ++v) {
        out[block_of_vertex[v]].push_back(v);
    }
    return out;
}

BlockPartition BlockPartition::from_labels(const GainGraph& g) {
    if (!g.has_labels()) {
        return single_block(g.vertex_count());
    }
    BlockPartition p;
    std::unordered_map<std::string, std::size_t> index;
    p.block_of_vertex.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& name = g.label(v);
        auto [it, inserted] = index.emplace(name, p.names.size());
        if (inserted) {
            p.names.push_back(name);
        }
        p.block_of_vertex[v] = it->second;
    }
    return p;
}

BlockPartition BlockPartition::single_block(std::size_t n_vertices, std::string name) {
    BlockPartition p;
    p.block_of_vertex.assign(n_vertices, 0);
    p.names.push_back(std::move(name));
    return p;
}

Eigen::MatrixXcd adjacency_matrix(const GainGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [key, gain] : g.edges()) {
        a(key.lo, key.hi) = gain;
        a(key.hi, key.lo) = std::conj(gain);
    }
    return a;
}

Eigen::MatrixXcd adjacency_matrix(const WeightedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.graph().vertex_count());
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [key, gain] : g.graph().edges()) {
        const Complex z = g.weights().at(key) * gain;
        a(key.lo, key.hi) = z;
        a(key.hi, key.lo) = std::conj(z);
    }
    return a;
}

WeightedGraph scale_edges(const GainGraph& g, double factor) {
    WeightedGraph w(g);
    w.scale_all(factor);
    return w;
}

std::vector<std::vector<std::size_t>> ComponentCensus::members() const {
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t v = 0; v < component_of.size(); ++v) {
        out[component_of[v]].push_back(v);
    }
    return out;
}

ComponentCensus connected_components(const GainGraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& [key, gain] : g.edges()) {
        auto a = find_root(parent, key.lo);
        auto b = find_root(parent, key.hi);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    ComponentCensus census;
    census.component_of.assign(n, 0);
    std::unordered_map<std::size_t, std::size_t> id_of_root;
    for (std::size_t v = 0; v < n; ++v) {
        auto root = find_root(parent, v);
        auto [it, inserted] = id_of_root.emplace(root, census.count);
        if (inserted) {
            ++census.count;
        }
        census.component_of[v] = it->second;
    }
    return census;
}

}  // namespace qlgraph
