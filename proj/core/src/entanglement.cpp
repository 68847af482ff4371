#include "qlgraph/entanglement.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qlgraph/errors.hpp"
#include "qlgraph/parallel.hpp"
#include "qlgraph/rng.hpp"
#include "qlgraph/spectral.hpp"
#include "qlgraph/su2.hpp"

namespace qlgraph {

namespace {

Eigen::Vector4cd checked_normalized(const Eigen::Vector4cd& a) {
    const double norm = a.norm();
    if (std::abs(norm - 1.0) <= kNormTolerance) {
        return a;
    }
    if (std::abs(norm - 1.0) <= kRenormalizeTolerance) {
        return a / norm;
    }
    std::ostringstream msg;
    msg << "two-bit state has norm " << norm << ", expected 1";
    throw ValidationError(msg.str());
}

void require_two_bit(const ProductGraph& p) {
    if (p.q != 2 || p.block_radix(0) != 2 || p.block_radix(1) != 2) {
        throw ValidationError("expected a product of two QL bits");
    }
}

}  // namespace

TwoBitState TwoBitState::from_projection(const Eigen::VectorXcd& projection) {
    if (projection.size() != 4) {
        throw ValidationError("a two-bit state needs exactly 4 block coefficients");
    }
    TwoBitState s;
    Eigen::VectorXcd v = checked_normalized(projection);
    fix_phase(v);
    s.amplitudes = v;
    return s;
}

double TwoBitState::diagonal_magnitude() const {
    return 0.5 * (std::abs(amplitudes(0)) + std::abs(amplitudes(3)));
}

double TwoBitState::off_diagonal_magnitude() const {
    return 0.5 * (std::abs(amplitudes(1)) + std::abs(amplitudes(2)));
}

double concurrence(const Eigen::Vector4cd& amplitudes) {
    const auto a = checked_normalized(amplitudes);
    return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

double concurrence(const TwoBitState& s) {
    return concurrence(s.amplitudes);
}

ExperimentResult nonseparable_experiment(const ProductGraph& base,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& extra_edges,
                                         double inherited_weight) {
    require_two_bit(base);
    if (!(inherited_weight > 0.0)) {
        throw ValidationError("inherited weight must be positive");
    }
    WeightedGraph wg(base.graph);
    for (const auto& [key, gain] : base.graph.edges()) {
        if (base.block_of_vertex[key.lo] != base.block_of_vertex[key.hi]) {
            wg.set_weight(key.lo, key.hi, inherited_weight);
        }
    }
    const auto n = base.graph.vertex_count();
    for (const auto& [u, v] : extra_edges) {
        if (u >= n || v >= n) {
            throw ValidationError("extra edge refers to a vertex outside the product");
        }
        const auto distance = base.block_distance(base.block_of_vertex[u], base.block_of_vertex[v]);
        if (distance != 2) {
            std::ostringstream msg;
            msg << "extra edge " << u << "--" << v << " joins " << base.block_label(base.block_of_vertex[u])
                << " and " << base.block_label(base.block_of_vertex[v])
                << "; extra edges must lie in a zero-coupling block";
            throw ValidationError(msg.str());
        }
        wg.add_edge(u, v, 1.0, 1.0);
    }

    const auto state = emergent_state(wg, base.blocks());
    ExperimentResult r;
    r.state = TwoBitState::from_projection(state.projection);
    r.concurrence = concurrence(r.state);
    r.eigenvalue = state.eigenvalue;
    r.gap = state.gap;
    r.extra_edges = extra_edges.size();
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_block_edges(const ProductGraph& base, std::size_t x,
                                                                    std::size_t y, double probability,
                                                                    std::uint64_t seed) {
    if (!(probability >= 0.0 && probability <= 1.0)) {
        throw ValidationError("edge probability must lie in [0, 1]");
    }
    if (x >= base.block_count() || y >= base.block_count() || x == y) {
        throw ValidationError("invalid block pair");
    }
    const auto members = base.blocks().members();
    auto rng = make_rng(seed, 0xE0);
    std::bernoulli_distribution coin(probability);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto u : members[x]) {
        for (auto v : members[y]) {
            if (coin(rng)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

ExperimentConfig preset_experiment(const std::string& name) {
    ExperimentConfig c;
    c.name = name;
    if (name == "paper-v1") {
        return c;
    }
    if (name == "paper-v2") {
        c.extra_probability = c.coupling_probability;
        return c;
    }
    if (name == "paper-v3") {
        c.inherited_weight = 0.01;
        c.extra_probability = c.coupling_probability / 10.0;
        return c;
    }
    throw ValidationError("unknown experiment '" + name + "' (expected paper-v1, paper-v2 or paper-v3)");
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::uint64_t seed) {
    std::vector<QLBit> bits;
    for (std::size_t k = 0; k < 2; ++k) {
        QLBitSpec spec;
        spec.n_per_subgraph = config.n_per_subgraph;
        spec.degree = config.degree;
        spec.coupling_bias = config.coupling_bias;
        spec.coupling_probability = config.coupling_probability;
        spec.rng_seed = derive_seed(seed, 1 + k);
        spec.name = k == 0 ? "a" : "b";
        bits.push_back(build_ql_bit(spec));
    }
    const auto product = optimized_product(bits, ProductLayout::tensor, derive_seed(seed, 3));
    std::vector<std::pair<std::size_t, std::size_t>> extras;
    if (config.extra_probability > 0.0) {
        // a1b2 and a2b1 carry codes 1 and 2.
        extras = sample_block_edges(product, 1, 2, config.extra_probability, derive_seed(seed, 4));
    }
    auto r = nonseparable_experiment(product, extras, config.inherited_weight);
    r.seed = seed;
    return r;
}

EnsembleSummary run_ensemble(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) {
        throw ValidationError("an ensemble needs at least one seed");
    }
    EnsembleSummary s;
    s.config = config;
    s.runs.resize(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) { s.runs[i] = run_experiment(config, seeds[i]); });

    const auto count = static_cast<double>(seeds.size());
    for (const auto& r : s.runs) {
        s.mean_concurrence += r.concurrence / count;
        s.mean_diagonal += r.state.diagonal_magnitude() / count;
        s.mean_off_diagonal += r.state.off_diagonal_magnitude() / count;
    }
    if (seeds.size() > 1) {
        double ss = 0.0;
        for (const auto& r : s.runs) {
            ss += (r.concurrence - s.mean_concurrence) * (r.concurrence - s.mean_concurrence);
        }
        s.sd_concurrence = std::sqrt(ss / (count - 1.0));
    }
    return s;
}

const std::vector<std::string>& natural_basis() {
    static const std::vector<std::string> basis{"a1b1", "a1b2", "a2b1", "a2b2"};
    return basis;
}

const std::vector<std::string>& reordered_basis() {
    static const std::vector<std::string> basis{"a1b1", "a2b2", "a2b1", "a1b2"};
    return basis;
}

BlockMatrix separable_block_matrix() {
    Eigen::Matrix4cd m;
    m << 0, 1, 1, 0,
         1, 0, 0, 1,
         1, 0, 0, 1,
         0, 1, 1, 0;
    return {m, natural_basis()};
}

Eigen::Matrix4d cnot_unitary() {
    Eigen::Matrix4d u;
    u << 1, 0, 0, 0,
         0, 0, 0, 1,
         0, 0, 1, 0,
         0, 1, 0, 0;
    return u;
}

namespace {

const std::vector<std::string>& toggled_basis(const std::vector<std::string>& basis) {
    if (basis == natural_basis()) {
        return reordered_basis();
    }
    if (basis == reordered_basis()) {
        return natural_basis();
    }
    std::ostringstream msg;
    msg << "unsupported basis ordering (";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        msg << (i ? ", " : "") << basis[i];
    }
    msg << "); expected (a1b1, a1b2, a2b1, a2b2) or (a1b1, a2b2, a2b1, a1b2)";
    throw ValidationError(msg.str());
}

}  // namespace

BlockMatrix cnot_transform(const BlockMatrix& a) {
    if (a.m.rows() != 4 || a.m.cols() != 4) {
        throw ValidationError("CNOT acts on 4x4 block matrices");
    }
    const auto& basis = toggled_basis(a.basis);
    const Eigen::Matrix4cd u = cnot_unitary().cast<Complex>();
    return {u * a.m * u.transpose(), basis};
}

GainGraph block_pattern_graph(const BlockMatrix& a) {
    const auto n = static_cast<std::size_t>(a.m.rows());
    GainGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(a.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > 0.0) {
                g.add_edge(i, j, 1.0);
            }
        }
        if (i < a.basis.size()) {
            g.set_label(i, a.basis[i]);
        }
    }
    return g;
}

namespace {

std::size_t contiguous_block_size(const BlockPartition& blocks) {
    const auto n = blocks.block_of_vertex.size();
    if (blocks.block_count() != 4 || n % 4 != 0) {
        throw ValidationError("expected four equal blocks");
    }
    const auto size = n / 4;
    for (std::size_t v = 0; v < n; ++v) {
        if (blocks.block_of_vertex[v] != v / size) {
            throw ValidationError("blocks must occupy consecutive, equal vertex ranges");
        }
    }
    return size;
}

}  // namespace

BlockGraph to_block_graph(const ProductGraph& p) {
    require_two_bit(p);
    BlockGraph out{p.graph, p.blocks()};
    out.blocks.names = natural_basis();
    contiguous_block_size(out.blocks);
    for (std::size_t v = 0; v < out.graph.vertex_count(); ++v) {
        out.graph.set_label(v, out.blocks.names[out.blocks.block_of_vertex[v]]);
    }
    return out;
}

BlockGraph cnot_transform(const BlockGraph& g) {
    const auto& basis = toggled_basis(g.blocks.names);
    const auto size = contiguous_block_size(g.blocks);
    if (g.graph.vertex_count() != 4 * size) {
        throw ValidationError("partition does not match the graph");
    }
    constexpr std::size_t swap[4] = {0, 3, 2, 1};
    auto move = [&](std::size_t v) { return swap[v / size] * size + v % size; };

    BlockGraph out;
    out.graph = GainGraph(g.graph.vertex_count());
    for (const auto& [key, gain] : g.graph.edges()) {
        out.graph.add_edge(move(key.lo), move(key.hi), gain);
    }
    out.blocks.block_of_vertex = g.blocks.block_of_vertex;
    out.blocks.names = basis;
    for (std::size_t v = 0; v < out.graph.vertex_count(); ++v) {
        out.graph.set_label(v, basis[v / size]);
    }
    return out;
}

}  // namespace qlgraph
