#include "qlgraph/product.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qlgraph/errors.hpp"
#include "qlgraph/regular.hpp"
#include "qlgraph/rng.hpp"

namespace qlgraph {

namespace {

std::string positional_name(std::size_t k) {
    if (k < 26) {
        return std::string(1, static_cast<char>('a' + k));
    }
    return "f" + std::to_string(k);
}

/// Factor names, falling back to positional letters when any is empty or repeated.
std::vector<std::string> resolve_names(const std::vector<std::string>& names) {
    std::set<std::string> seen(names.begin(), names.end());
    const bool usable = seen.size() == names.size() &&
                        std::none_of(names.begin(), names.end(), [](const auto& s) { return s.empty(); });
    if (usable) {
        return names;
    }
    std::vector<std::string> out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        out.push_back(positional_name(k));
    }
    return out;
}

std::size_t checked_product(const std::vector<std::size_t>& sizes) {
    std::size_t total = 1;
    for (auto s : sizes) {
        if (s != 0 && total > kMaxProductVertices / s) {
            std::ostringstream msg;
            msg << "product exceeds the cap of " << kMaxProductVertices << " vertices";
            throw ValidationError(msg.str());
        }
        total *= s;
    }
    if (total > kMaxProductVertices) {
        std::ostringstream msg;
        msg << "product has " << total << " vertices, above the cap of " << kMaxProductVertices;
        throw ValidationError(msg.str());
    }
    return total;
}

void label_blocks(ProductGraph& p) {
    for (std::size_t v = 0; v < p.graph.vertex_count(); ++v) {
        p.graph.set_label(v, p.block_label(p.block_of_vertex[v]));
    }
}

}  // namespace

ProductFactor ProductFactor::from_bit(const QLBit& bit) {
    return {bit.graph, bit.blocks(), bit.spec.name};
}

ProductFactor ProductFactor::from_graph(const GainGraph& g, std::string name) {
    return {g, BlockPartition::from_labels(g), std::move(name)};
}

std::size_t ProductGraph::block_count() const {
    std::size_t total = 1;
    for (const auto& names : block_names) {
        total *= names.size();
    }
    return total;
}

std::vector<std::size_t> ProductGraph::decode_block(std::size_t code) const {
    std::vector<std::size_t> tuple(q, 0);
    for (std::size_t k = q; k-- > 0;) {
        const auto r = block_radix(k);
        tuple[k] = code % r;
        code /= r;
    }
    return tuple;
}

std::size_t ProductGraph::encode_block(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != q) {
        throw ValidationError("block tuple has the wrong length");
    }
    std::size_t code = 0;
    for (std::size_t k = 0; k < q; ++k) {
        if (tuple[k] >= block_radix(k)) {
            throw ValidationError("block tuple entry out of range");
        }
        code = code * block_radix(k) + tuple[k];
    }
    return code;
}

std::string ProductGraph::block_label(std::size_t code) const {
    const auto tuple = decode_block(code);
    std::string out;
    for (std::size_t k = 0; k < q; ++k) {
        out += block_names[k][tuple[k]];
    }
    return out;
}

std::size_t ProductGraph::block_distance(std::size_t x, std::size_t y) const {
    const auto tx = decode_block(x);
    const auto ty = decode_block(y);
    std::size_t diff = 0;
    for (std::size_t k = 0; k < q; ++k) {
        diff += tx[k] != ty[k] ? 1 : 0;
    }
    return diff;
}

BlockPartition ProductGraph::blocks() const {
    BlockPartition p;
    p.block_of_vertex = block_of_vertex;
    for (std::size_t c = 0; c < block_count(); ++c) {
        p.names.push_back(block_label(c));
    }
    return p;
}

std::vector<std::size_t> ProductGraph::vertex_tuple(std::size_t v) const {
    if (factor_sizes.empty()) {
        throw ValidationError("vertices of an optimized or contracted product are not tuples");
    }
    std::vector<std::size_t> tuple(factor_sizes.size(), 0);
    for (std::size_t k = factor_sizes.size(); k-- > 0;) {
        tuple[k] = v % factor_sizes[k];
        v /= factor_sizes[k];
    }
    return tuple;
}

ProductGraph cartesian_product(const std::vector<ProductFactor>& factors) {
    if (factors.empty()) {
        throw ValidationError("a product needs at least one factor");
    }
    ProductGraph p;
    p.q = factors.size();
    std::vector<std::string> names;
    for (const auto& f : factors) {
        if (f.blocks.block_of_vertex.size() != f.graph.vertex_count()) {
            throw ValidationError("factor partition does not cover the factor's vertices");
        }
        p.factor_sizes.push_back(f.graph.vertex_count());
        p.block_names.push_back(f.blocks.names);
        names.push_back(f.name);
    }
    p.factor_names = resolve_names(names);
    const auto total = checked_product(p.factor_sizes);
    p.graph = GainGraph(total);

    std::vector<std::size_t> stride(p.q, 1);
    for (std::size_t k = p.q - 1; k-- > 0;) {
        stride[k] = stride[k + 1] * p.factor_sizes[k + 1];
    }

    for (std::size_t k = 0; k < p.q; ++k) {
        const auto nk = p.factor_sizes[k];
        const auto outer = total / (nk * stride[k]);
        for (const auto& [key, gain] : factors[k].graph.edges()) {
            for (std::size_t pre = 0; pre < outer; ++pre) {
                const auto base = pre * nk * stride[k];
                for (std::size_t suf = 0; suf < stride[k]; ++suf) {
                    p.graph.add_edge(base + key.lo * stride[k] + suf, base + key.hi * stride[k] + suf, gain);
                }
            }
        }
    }

    p.block_of_vertex.resize(total);
    for (std::size_t v = 0; v < total; ++v) {
        std::size_t code = 0;
        for (std::size_t k = 0; k < p.q; ++k) {
            const auto x = (v / stride[k]) % p.factor_sizes[k];
            code = code * p.block_radix(k) + factors[k].blocks.block_of_vertex[x];
        }
        p.block_of_vertex[v] = code;
    }

    const bool labeled = std::any_of(factors.begin(), factors.end(),
                                     [](const auto& f) { return f.graph.has_labels(); });
    if (labeled) {
        label_blocks(p);
    }
    return p;
}

ProductGraph cartesian_product(const GainGraph& g, const GainGraph& h) {
    return cartesian_product(std::vector<ProductFactor>{ProductFactor::from_graph(g), ProductFactor::from_graph(h)});
}

ProductGraph cartesian_product(const std::vector<QLBit>& bits) {
    std::vector<ProductFactor> factors;
    for (const auto& b : bits) {
        factors.push_back(ProductFactor::from_bit(b));
    }
    auto p = cartesian_product(factors);
    for (const auto& b : bits) {
        p.factor_specs.push_back(b.spec);
    }
    return p;
}

std::vector<VertexPair> edge_rule_violations(const ProductGraph& p) {
    std::vector<VertexPair> bad;
    for (const auto& [key, gain] : p.graph.edges()) {
        if (!p.factor_sizes.empty()) {
            const auto a = p.vertex_tuple(key.lo);
            const auto b = p.vertex_tuple(key.hi);
            std::size_t diff = 0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                diff += a[k] != b[k] ? 1 : 0;
            }
            if (diff != 1) {
                bad.push_back(key);
            }
        } else if (p.block_distance(p.block_of_vertex[key.lo], p.block_of_vertex[key.hi]) > 1) {
            bad.push_back(key);
        }
    }
    return bad;
}

Spectrum compose_spectrum(const Spectrum& g, const Spectrum& h, bool with_vectors) {
    const auto ng = g.size();
    const auto nh = h.size();
    const auto total = ng * nh;
    if (with_vectors && total > kMaxEigenDimension) {
        std::ostringstream msg;
        msg << "composed eigenvector matrix of dimension " << total << " exceeds the cap of "
            << kMaxEigenDimension << "; compose eigenvalues only";
        throw ValidationError(msg.str());
    }
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](std::size_t idx) {
        return g.eigenvalues(static_cast<Eigen::Index>(idx / nh)) + h.eigenvalues(static_cast<Eigen::Index>(idx % nh));
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return value(x) > value(y); });

    Spectrum out;
    out.eigenvalues.resize(static_cast<Eigen::Index>(total));
    if (with_vectors) {
        out.eigenvectors.resize(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    }
    for (std::size_t k = 0; k < total; ++k) {
        const auto i = static_cast<Eigen::Index>(order[k] / nh);
        const auto j = static_cast<Eigen::Index>(order[k] % nh);
        out.eigenvalues(static_cast<Eigen::Index>(k)) = value(order[k]);
        if (with_vectors) {
            for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(ng); ++a) {
                out.eigenvectors.col(static_cast<Eigen::Index>(k)).segment(a * static_cast<Eigen::Index>(nh), static_cast<Eigen::Index>(nh)) =
                    g.eigenvectors(a, i) * h.eigenvectors.col(j);
            }
        }
    }
    return out;
}

namespace {

Eigen::VectorXcd kron(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    Eigen::VectorXcd out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return out;
}

}  // namespace

EmergentState emergent_product_state(const std::vector<QLBit>& bits) {
    if (bits.empty() || bits.size() > 6) {
        throw ValidationError("emergent product states are supported for 1 to 6 bits");
    }
    std::vector<EmergentState> parts;
    std::size_t total = 1;
    for (const auto& b : bits) {
        parts.push_back(emergent_state(b));
        total *= b.graph.vertex_count();
    }
    EmergentState s = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        s.eigenvalue += parts[k].eigenvalue;
        s.gap = std::min(s.gap, parts[k].gap);
        s.projection = kron(s.projection, parts[k].projection);
        if (total <= kMaxProductVertices) {
            s.vector = kron(s.vector, parts[k].vector);
        }
    }
    if (total > kMaxProductVertices) {
        s.vector.resize(0);
    }
    fix_phase(s.projection);
    return s;
}

std::uint64_t zero_coupling_block_count(std::size_t q) {
    if (q == 0 || q > 31) {
        throw ValidationError("zero-coupling census needs 1 <= q <= 31");
    }
    const std::uint64_t blocks = std::uint64_t{1} << q;
    return (blocks * blocks - (q + 1) * blocks) / 2;
}

std::uint64_t enumerate_zero_coupling_blocks(std::size_t q) {
    if (q == 0 || q > 12) {
        throw ValidationError("zero-coupling enumeration needs 1 <= q <= 12");
    }
    const std::uint32_t blocks = 1u << q;
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < blocks; ++x) {
        for (std::uint32_t y = x + 1; y < blocks; ++y) {
            if (std::popcount(x ^ y) >= 2) {
                ++count;
            }
        }
    }
    return count;
}

ProductGraph optimized_product(const std::vector<QLBit>& bits, ProductLayout layout, std::uint64_t seed) {
    if (bits.empty() || bits.size() > 16) {
        throw ValidationError("optimized products need 1 to 16 bits");
    }
    const auto n = bits.front().spec.n_per_subgraph;
    const auto d = bits.front().spec.degree;
    for (const auto& b : bits) {
        if (b.spec.n_per_subgraph != n || b.spec.degree != d) {
            std::ostringstream msg;
            msg << "optimized product needs identical factor sizes: got n = " << b.spec.n_per_subgraph
                << ", d = " << b.spec.degree << " against n = " << n << ", d = " << d;
            throw ValidationError(msg.str());
        }
    }
    const std::size_t q = bits.size();
    const std::size_t blocks = std::size_t{1} << q;
    const auto total = checked_product({n, blocks});

    ProductGraph p;
    p.q = q;
    std::vector<std::string> names;
    for (const auto& b : bits) {
        names.push_back(b.spec.name);
        p.factor_specs.push_back(b.spec);
    }
    p.factor_names = resolve_names(names);
    for (const auto& name : p.factor_names) {
        p.block_names.push_back({name + "1", name + "2"});
    }
    p.graph = GainGraph(total);
    p.block_of_vertex.resize(total);
    for (std::size_t v = 0; v < total; ++v) {
        p.block_of_vertex[v] = v / n;
    }

    const auto shared = layout == ProductLayout::tensor ? generate_d_regular(n, d, derive_seed(seed, 0)) : GainGraph();
    for (std::size_t code = 0; code < blocks; ++code) {
        const auto block = layout == ProductLayout::tensor ? shared : generate_d_regular(n, d, derive_seed(seed, 1 + code));
        for (const auto& [key, gain] : block.edges()) {
            p.graph.add_edge(code * n + key.lo, code * n + key.hi, 1.0);
        }
    }

    for (std::size_t k = 0; k < q; ++k) {
        const auto& spec = bits[k].spec;
        const std::size_t bit = std::size_t{1} << (q - 1 - k);
        std::bernoulli_distribution coin(spec.coupling_probability);

        std::vector<std::pair<std::size_t, std::size_t>> pattern;
        if (layout == ProductLayout::tensor) {
            auto rng = make_rng(seed, 0x100 + k);
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = u; v < n; ++v) {
                    if (coin(rng)) {
                        pattern.emplace_back(u, v);
                        if (u != v) {
                            pattern.emplace_back(v, u);
                        }
                    }
                }
            }
        }
        for (std::size_t code = 0; code < blocks; ++code) {
            if (code & bit) {
                continue;
            }
            const auto partner = code | bit;
            if (layout == ProductLayout::independent) {
                pattern.clear();
                auto rng = make_rng(seed, 0x10000 + code * q + k);
                for (std::size_t u = 0; u < n; ++u) {
                    for (std::size_t v = 0; v < n; ++v) {
                        if (coin(rng)) {
                            pattern.emplace_back(u, v);
                        }
                    }
                }
            }
            for (const auto& [u, v] : pattern) {
                p.graph.add_edge(code * n + u, partner * n + v, spec.coupling_bias);
            }
        }
    }
    label_blocks(p);
    return p;
}

GainGraph QuotientGraph::to_graph() const {
    GainGraph g(node_count);
    for (const auto& [x, y] : edges) {
        g.add_edge(x, y, 1.0);
    }
    for (std::size_t v = 0; v < names.size() && v < node_count; ++v) {
        g.set_label(v, names[v]);
    }
    return g;
}

QuotientGraph quotient(const GainGraph& g, const BlockPartition& blocks) {
    if (blocks.block_of_vertex.size() != g.vertex_count()) {
        throw ValidationError("partition does not cover the graph");
    }
    QuotientGraph qg;
    qg.node_count = blocks.block_count();
    qg.names = blocks.names;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [key, gain] : g.edges()) {
        const auto a = blocks.block_of_vertex[key.lo];
        const auto b = blocks.block_of_vertex[key.hi];
        if (a != b) {
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    }
    qg.edges.assign(edges.begin(), edges.end());
    return qg;
}

QuotientGraph quotient(const ProductGraph& p) {
    return quotient(p.graph, p.blocks());
}

namespace {

bool verify_labels(const QuotientGraph& qg, std::size_t q, const std::vector<std::uint32_t>& labels, std::string& reason) {
    std::vector<bool> used(std::size_t{1} << q, false);
    for (std::size_t v = 0; v < qg.node_count; ++v) {
        if (labels[v] >= used.size() || used[labels[v]]) {
            reason = "labeling is not a bijection onto {0,1}^q";
            return false;
        }
        used[labels[v]] = true;
    }
    for (const auto& [x, y] : qg.edges) {
        if (std::popcount(labels[x] ^ labels[y]) != 1) {
            std::ostringstream msg;
            msg << "edge " << x << "--" << y << " joins labels differing in more than one coordinate";
            reason = msg.str();
            return false;
        }
    }
    return true;
}

}  // namespace

HypercubeCertificate hypercube_check(const QuotientGraph& qg, std::size_t q) {
    HypercubeCertificate cert;
    if (q > 20) {
        cert.reason = "dimension too large";
        return cert;
    }
    const std::size_t nodes = std::size_t{1} << q;
    if (qg.node_count != nodes) {
        cert.reason = "node count is not 2^q";
        return cert;
    }
    const std::size_t expected_edges = q * nodes / 2;
    if (qg.edges.size() != expected_edges) {
        std::ostringstream msg;
        msg << "edge count " << qg.edges.size() << " differs from q 2^(q-1) = " << expected_edges;
        cert.reason = msg.str();
        return cert;
    }
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (const auto& [x, y] : qg.edges) {
        if (x == y || x >= nodes || y >= nodes) {
            cert.reason = "malformed edge";
            return cert;
        }
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (const auto& nb : adj) {
        if (nb.size() != q) {
            cert.reason = "graph is not q-regular";
            return cert;
        }
    }

    std::vector<std::uint32_t> labels(nodes);
    std::iota(labels.begin(), labels.end(), 0u);
    std::string reason;
    if (verify_labels(qg, q, labels, reason)) {
        cert.is_hypercube = true;
        cert.label_of_node = labels;
        return cert;
    }

    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(nodes, unset);
    std::vector<std::size_t> queue{0};
    dist[0] = 0;
    std::fill(labels.begin(), labels.end(), 0u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        auto sorted = adj[v];
        std::sort(sorted.begin(), sorted.end());
        for (auto w : sorted) {
            if (dist[w] == unset) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != nodes) {
        cert.reason = "graph is disconnected";
        return cert;
    }
    auto root_neighbors = adj[0];
    std::sort(root_neighbors.begin(), root_neighbors.end());
    for (std::size_t i = 0; i < root_neighbors.size(); ++i) {
        labels[root_neighbors[i]] = 1u << i;
    }
    for (auto v : queue) {
        if (dist[v] < 2) {
            continue;
        }
        for (auto w : adj[v]) {
            if (dist[w] + 1 == dist[v]) {
                labels[v] |= labels[w];
            }
        }
    }
    if (!verify_labels(qg, q, labels, reason)) {
        cert.reason = reason;
        return cert;
    }
    cert.is_hypercube = true;
    cert.label_of_node = labels;
    return cert;
}

HypercubeCertificate hypercube_check(const GainGraph& g, std::size_t q) {
    QuotientGraph qg;
    qg.node_count = g.vertex_count();
    for (const auto& [key, gain] : g.edges()) {
        qg.edges.emplace_back(key.lo, key.hi);
    }
    return hypercube_check(qg, q);
}

GainGraph contract_subgraph(const GainGraph& g, const std::vector<std::vector<std::size_t>>& sets,
                            std::size_t target_degree, std::uint64_t seed) {
    const auto n = g.vertex_count();
    if (sets.empty()) {
        throw ValidationError("contraction needs at least one set");
    }
    const auto size = sets.front().size();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> set_of(n, unset);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        if (sets[s].size() != size || size == 0) {
            std::ostringstream msg;
            msg << "uneven partition: set " << s << " has " << sets[s].size() << " vertices, expected " << size;
            throw ValidationError(msg.str());
        }
        for (auto v : sets[s]) {
            if (v >= n) {
                throw ValidationError("partition refers to a vertex outside the graph");
            }
            if (set_of[v] != unset) {
                throw ValidationError("partition sets overlap");
            }
            set_of[v] = s;
            if (g.label(v) != g.label(sets[s].front())) {
                throw ValidationError("a contraction set spans more than one block");
            }
        }
    }
    if (std::find(set_of.begin(), set_of.end(), unset) != set_of.end()) {
        throw ValidationError("partition does not cover every vertex");
    }

    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    auto smallest = [&](std::size_t s) { return *std::min_element(sets[s].begin(), sets[s].end()); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return smallest(a) < smallest(b); });
    std::vector<std::size_t> new_id_of_set(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id_of_set[order[i]] = i;
    }

    const auto m = sets.size();
    GainGraph out(m);
    if (g.has_labels()) {
        for (std::size_t i = 0; i < m; ++i) {
            out.set_label(i, g.label(sets[order[i]].front()));
        }
    }

    struct Merged {
        Complex sum{0.0, 0.0};
        Complex first{0.0, 0.0};
        std::size_t count = 0;
    };
    std::map<VertexPair, Merged> merged;
    for (const auto& [key, gain] : g.edges()) {
        const auto a = new_id_of_set[set_of[key.lo]];
        const auto b = new_id_of_set[set_of[key.hi]];
        if (a == b) {
            continue;
        }
        const Complex oriented = a < b ? gain : std::conj(gain);
        auto& e = merged[make_vertex_pair(a, b)];
        if (e.count == 0) {
            e.first = oriented;
        }
        e.sum += oriented;
        ++e.count;
    }

    const auto blocks = BlockPartition::from_labels(out);
    std::vector<std::size_t> intra_degree(m, 0);
    for (const auto& [key, e] : merged) {
        if (blocks.block_of_vertex[key.lo] == blocks.block_of_vertex[key.hi]) {
            ++intra_degree[key.lo];
            ++intra_degree[key.hi];
        }
    }
    const auto members = blocks.members();
    std::vector<bool> regenerate(blocks.block_count(), false);
    for (std::size_t b = 0; b < blocks.block_count(); ++b) {
        for (auto v : members[b]) {
            if (intra_degree[v] != target_degree) {
                regenerate[b] = true;
            }
        }
    }

    for (const auto& [key, e] : merged) {
        const auto block = blocks.block_of_vertex[key.lo];
        if (block == blocks.block_of_vertex[key.hi] && regenerate[block]) {
            continue;
        }
        if (e.count == 1) {
            out.add_edge(key.lo, key.hi, e.first);
        } else if (std::abs(e.sum) > 1e-12) {
            out.add_edge(key.lo, key.hi, e.sum / std::abs(e.sum));
        }
    }
    for (std::size_t b = 0; b < blocks.block_count(); ++b) {
        if (!regenerate[b]) {
            continue;
        }
        const auto fresh = generate_d_regular(members[b].size(), target_degree, derive_seed(seed, b));
        for (const auto& [key, gain] : fresh.edges()) {
            out.add_edge(members[b][key.lo], members[b][key.hi], 1.0);
        }
    }
    return out;
}

ProductGraph contract_product(const ProductGraph& full, std::size_t target_degree, std::uint64_t seed) {
    if (full.factor_sizes.empty()) {
        throw ValidationError("contraction expects a full Cartesian product");
    }
    const auto total = full.graph.vertex_count();
    const auto rest = total / full.factor_sizes.front();

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t v = 0; v < total; ++v) {
        const auto key = std::make_pair(v / rest, full.block_of_vertex[v]);
        auto [it, inserted] = index.emplace(key, sets.size());
        if (inserted) {
            sets.emplace_back();
        }
        sets[it->second].push_back(v);
    }

    GainGraph labeled = full.graph;
    for (std::size_t v = 0; v < total; ++v) {
        labeled.set_label(v, full.block_label(full.block_of_vertex[v]));
    }

    ProductGraph out;
    out.graph = contract_subgraph(labeled, sets, target_degree, seed);
    out.q = full.q;
    out.factor_names = full.factor_names;
    out.block_names = full.block_names;
    out.factor_specs = full.factor_specs;
    // Sets were created in order of their smallest member, which is also the
    // numbering contract_subgraph uses.
    out.block_of_vertex.resize(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out.block_of_vertex[i] = full.block_of_vertex[sets[i].front()];
    }
    return out;
}

GainGraph lift_contracted_block(const GainGraph& block, std::size_t d, std::uint64_t seed) {
    GainGraph plain(block.vertex_count());
    for (const auto& [key, gain] : block.edges()) {
        plain.add_edge(key.lo, key.hi, gain);
    }
    const auto partner = generate_d_regular(block.vertex_count(), d, seed);
    return cartesian_product(plain, partner).graph;
}

GainGraph induced_block(const GainGraph& g, const BlockPartition& blocks, std::size_t block) {
    if (blocks.block_of_vertex.size() != g.vertex_count() || block >= blocks.block_count()) {
        throw ValidationError("invalid block selection");
    }
    const auto members = blocks.members()[block];
    std::vector<std::size_t> local(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < members.size(); ++i) {
        local[members[i]] = i;
    }
    GainGraph out(members.size());
    for (const auto& [key, gain] : g.edges()) {
        if (blocks.block_of_vertex[key.lo] == block && blocks.block_of_vertex[key.hi] == block) {
            out.add_edge(local[key.lo], local[key.hi], gain);
        }
    }
    if (g.has_labels()) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            out.set_label(i, g.label(members[i]));
        }
    }
    return out;
}

}  // namespace qlgraph
