#include "qlgraph/regular.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qlgraph/errors.hpp"
#include "qlgraph/rng.hpp"

namespace qlgraph {

namespace {

using EdgeSet = std::set<VertexPair>;

// True when some pair of distinct stub owners is not yet joined.
bool has_admissible_pair(const EdgeSet& edges, const std::map<std::size_t, std::size_t>& pending) {
    if (pending.size() < 2) {
        return false;
    }
    for (auto a = pending.begin(); a != pending.end(); ++a) {
        for (auto b = std::next(a); b != pending.end(); ++b) {
            if (!edges.contains(VertexPair{a->first, b->first})) {
                return true;
            }
        }
    }
    return false;
}

std::optional<EdgeSet> try_pairing(std::size_t n, std::size_t d, Rng& rng) {
    EdgeSet edges;
    std::vector<std::size_t> stubs;
    stubs.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v) {
        stubs.insert(stubs.end(), d, v);
    }
    while (!stubs.empty()) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::map<std::size_t, std::size_t> pending;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            auto u = stubs[k];
            auto v = stubs[k + 1];
            auto key = make_vertex_pair(u, v);
            if (u != v && !edges.contains(key)) {
                edges.insert(key);
            } else {
                ++pending[u];
                ++pending[v];
            }
        }
        if (pending.empty()) {
            break;
        }
        if (!has_admissible_pair(edges, pending)) {
            return std::nullopt;
        }
        stubs.clear();
        for (const auto& [v, count] : pending) {
            stubs.insert(stubs.end(), count, v);
        }
    }
    return edges;
}

}  // namespace

GainGraph generate_d_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d >= n) {
        throw ValidationError("d-regular graph needs d < n (d = " + std::to_string(d) +
                              ", n = " + std::to_string(n) + ")");
    }
    if ((n * d) % 2 != 0) {
        throw ValidationError("n * d must be even for a d-regular graph (n = " +
                              std::to_string(n) + ", d = " + std::to_string(d) + ")");
    }
    auto rng = make_rng(seed, 0x5245);
    for (int attempt = 0; attempt < kMaxRegularRestarts; ++attempt) {
        if (auto edges = try_pairing(n, d, rng)) {
            GainGraph g(n);
            for (const auto& key : *edges) {
                g.add_edge(key.lo, key.hi, 1.0);
            }
            return g;
        }
    }
    throw NumericalError("d-regular pairing failed after " + std::to_string(kMaxRegularRestarts) +
                         " restarts (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
}

bool is_regular(const GainGraph& g, std::size_t d) {
    auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [d](std::size_t k) { return k == d; });
}

}  // namespace qlgraph
