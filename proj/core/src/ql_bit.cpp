#include "qlgraph/ql_bit.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qlgraph/errors.hpp"
#include "qlgraph/regular.hpp"
#include "qlgraph/rng.hpp"

namespace qlgraph {

void QLBitSpec::validate() const {
    std::ostringstream msg;
    if (n_per_subgraph == 0 || degree >= n_per_subgraph) {
        msg << "QL bit needs 0 <= degree < n_per_subgraph (degree = " << degree
            << ", n = " << n_per_subgraph << ")";
        throw ValidationError(msg.str());
    }
    if ((n_per_subgraph * degree) % 2 != 0) {
        msg << "n * d must be even (n = " << n_per_subgraph << ", d = " << degree << ")";
        throw ValidationError(msg.str());
    }
    if (std::abs(std::abs(coupling_bias) - 1.0) >= kUnitTolerance) {
        msg << "coupling bias " << coupling_bias << " is not a complex unit";
        throw ValidationError(msg.str());
    }
    if (!(coupling_probability > 0.0 && coupling_probability <= 1.0)) {
        msg << "coupling probability must lie in (0, 1], got " << coupling_probability;
        throw ValidationError(msg.str());
    }
    if (!(coupling_probability * static_cast<double>(n_per_subgraph) < static_cast<double>(degree))) {
        msg << "expected coupling edges per vertex (" << coupling_probability * n_per_subgraph
            << ") must stay below the subgraph degree " << degree;
        throw ValidationError(msg.str());
    }
    if (name.empty()) {
        throw ValidationError("QL bit name must not be empty");
    }
}

std::size_t QLBit::coupling_edge_count() const {
    const auto n = spec.n_per_subgraph;
    std::size_t count = 0;
    for (const auto& [key, gain] : graph.edges()) {
        if (key.lo < n && key.hi >= n) {
            ++count;
        }
    }
    return count;
}

BlockPartition QLBit::blocks() const {
    BlockPartition p;
    p.names = {spec.name + "1", spec.name + "2"};
    p.block_of_vertex.assign(2 * spec.n_per_subgraph, 0);
    for (auto v : partition[1]) {
        p.block_of_vertex[v] = 1;
    }
    return p;
}

QLBit build_ql_bit(const QLBitSpec& spec) {
    spec.validate();
    const auto n = spec.n_per_subgraph;

    QLBit bit;
    bit.spec = spec;
    bit.graph = GainGraph(2 * n);

    const auto first = generate_d_regular(n, spec.degree, derive_seed(spec.rng_seed, 1));
    const auto second = generate_d_regular(n, spec.degree, derive_seed(spec.rng_seed, 2));
    for (const auto& [key, gain] : first.edges()) {
        bit.graph.add_edge(key.lo, key.hi, 1.0);
    }
    for (const auto& [key, gain] : second.edges()) {
        bit.graph.add_edge(n + key.lo, n + key.hi, 1.0);
    }

    // The coupling draw does not depend on the bias, so bits that differ only in
    // c share their edge set.
    auto rng = make_rng(spec.rng_seed, 3);
    std::bernoulli_distribution coin(spec.coupling_probability);
    std::vector<std::size_t> coupling_degree(2 * n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (coin(rng)) {
                bit.graph.add_edge(u, n + v, spec.coupling_bias);
                ++coupling_degree[u];
                ++coupling_degree[n + v];
            }
        }
    }

    for (std::size_t v = 0; v < 2 * n; ++v) {
        bit.graph.set_label(v, spec.name + (v < n ? "1" : "2"));
        bit.partition[v < n ? 0 : 1].push_back(v);
        if (coupling_degree[v] == 0) {
            ++bit.uncoupled_vertices;
        }
    }
    return bit;
}

}  // namespace qlgraph
