#include "qlgraph/kuramoto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qlgraph/errors.hpp"
#include "qlgraph/rng.hpp"

namespace qlgraph {

double wrap_phase(double x) {
    double r = std::remainder(x, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r += 2.0 * std::numbers::pi;
    }
    return r;
}

void OscillatorEnsemble::validate(std::size_t n_vertices) const {
    if (thetas.size() != n_vertices || epsilons.size() != n_vertices) {
        std::ostringstream msg;
        msg << "ensemble has " << thetas.size() << " phases and " << epsilons.size()
            << " offsets but the graph has " << n_vertices << " vertices";
        throw ValidationError(msg.str());
    }
    if (!epsilons.empty()) {
        const double mean = std::accumulate(epsilons.begin(), epsilons.end(), 0.0) / static_cast<double>(epsilons.size());
        if (std::abs(mean) > 1e-9) {
            std::ostringstream msg;
            msg << "frequency offsets must average to zero (mean " << mean << ")";
            throw ValidationError(msg.str());
        }
    }
    for (const auto& s : simplex) {
        if (s.i >= n_vertices || s.j >= n_vertices || s.l >= n_vertices || s.m >= n_vertices) {
            throw ValidationError("simplex tensor index out of range");
        }
    }
}

OscillatorEnsemble random_ensemble(std::size_t n, double K, std::uint64_t seed) {
    auto rng = make_rng(seed, 0x4B);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    OscillatorEnsemble e;
    e.K = K;
    e.thetas.resize(n);
    for (auto& t : e.thetas) {
        t = wrap_phase(angle(rng));
    }
    e.epsilons.assign(n, 0.0);
    return e;
}

namespace {

struct FlatEdge {
    std::size_t lo;
    std::size_t hi;
    double phase;
};

std::vector<FlatEdge> flatten(const GainGraph& g) {
    std::vector<FlatEdge> out;
    out.reserve(g.edge_count());
    for (const auto& [key, gain] : g.edges()) {
        out.push_back({key.lo, key.hi, std::arg(gain)});
    }
    return out;
}

void rhs(const OscillatorEnsemble& e, const std::vector<FlatEdge>& edges, bool higher_order,
         const std::vector<double>& th, std::vector<double>& out) {
    const auto n = th.size();
    const double nn = static_cast<double>(n);
    out = e.epsilons;
    const double k = e.K / nn;
    for (const auto& edge : edges) {
        const double s = k * std::sin(th[edge.hi] - th[edge.lo] - edge.phase);
        out[edge.lo] += s;
        out[edge.hi] -= s;
    }
    if (higher_order && e.K_prime != 0.0) {
        const double kp = e.K_prime / (nn * nn * nn);
        for (const auto& c : e.simplex) {
            out[c.i] += kp * std::sin(th[c.j] - th[c.i] + th[c.l] - th[c.m]);
        }
    }
}

void rk4_step(const OscillatorEnsemble& e, const std::vector<FlatEdge>& edges, bool higher_order, double dt,
              std::vector<double>& th) {
    const auto n = th.size();
    std::vector<double> k1, k2, k3, k4, tmp(n);
    rhs(e, edges, higher_order, th, k1);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = th[i] + 0.5 * dt * k1[i];
    }
    rhs(e, edges, higher_order, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = th[i] + 0.5 * dt * k2[i];
    }
    rhs(e, edges, higher_order, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = th[i] + dt * k3[i];
    }
    rhs(e, edges, higher_order, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
        th[i] = wrap_phase(th[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    }
}

OscillatorEnsemble step(const OscillatorEnsemble& e, const GainGraph& g, double dt, bool higher_order) {
    e.validate(g.vertex_count());
    if (!(dt > 0.0)) {
        throw ValidationError("time step must be positive");
    }
    OscillatorEnsemble out = e;
    rk4_step(e, flatten(g), higher_order, dt, out.thetas);
    return out;
}

}  // namespace

std::vector<double> kuramoto_rhs(const OscillatorEnsemble& e, const std::vector<double>& thetas, const GainGraph& g) {
    e.validate(g.vertex_count());
    if (thetas.size() != e.size()) {
        throw ValidationError("phase vector size mismatch");
    }
    std::vector<double> out;
    rhs(e, flatten(g), true, thetas, out);
    return out;
}

OscillatorEnsemble step_pairwise(const OscillatorEnsemble& e, const GainGraph& g, double dt) {
    return step(e, g, dt, false);
}

OscillatorEnsemble step_higher_order(const OscillatorEnsemble& e, const GainGraph& g, double dt) {
    return step(e, g, dt, true);
}

OrderParameter order_parameter(const std::vector<double>& thetas) {
    if (thetas.empty()) {
        return {};
    }
    Complex z{0.0, 0.0};
    for (double t : thetas) {
        z += std::polar(1.0, t);
    }
    z /= static_cast<double>(thetas.size());
    return {std::min(1.0, std::abs(z)), std::arg(z)};
}

GainGraph phases_to_gains(const GainGraph& g, const std::vector<double>& thetas) {
    if (thetas.size() != g.vertex_count()) {
        throw ValidationError("one phase per vertex is required");
    }
    GainGraph out(g.vertex_count());
    for (const auto& [key, gain] : g.edges()) {
        Complex z = gain * std::polar(1.0, thetas[key.lo] - thetas[key.hi]);
        out.add_edge(key.lo, key.hi, z / std::abs(z));
    }
    for (std::size_t v = 0; v < g.labels().size(); ++v) {
        out.set_label(v, g.label(v));
    }
    return out;
}

void SimConfig::validate() const {
    if (!(dt > 0.0) || !(t_max > dt)) {
        throw ValidationError("simulation needs dt > 0 and t_max > dt");
    }
    if (record_every == 0 || plateau_window == 0) {
        throw ValidationError("record_every and plateau_window must be positive");
    }
    if (!(convergence_threshold >= 0.0)) {
        throw ValidationError("convergence threshold must be non-negative");
    }
}

std::vector<BlockPhaseStats> block_phase_stats(const std::vector<double>& thetas, const BlockPartition& blocks) {
    if (blocks.block_of_vertex.size() != thetas.size()) {
        throw ValidationError("partition does not match the ensemble");
    }
    std::vector<Complex> sums(blocks.block_count(), Complex{0.0, 0.0});
    std::vector<std::size_t> counts(blocks.block_count(), 0);
    for (std::size_t v = 0; v < thetas.size(); ++v) {
        sums[blocks.block_of_vertex[v]] += std::polar(1.0, thetas[v]);
        ++counts[blocks.block_of_vertex[v]];
    }
    std::vector<BlockPhaseStats> out;
    for (std::size_t b = 0; b < blocks.block_count(); ++b) {
        BlockPhaseStats s;
        s.name = blocks.names[b];
        if (counts[b] > 0) {
            const Complex mean = sums[b] / static_cast<double>(counts[b]);
            const double r = std::min(1.0, std::abs(mean));
            s.mean = std::arg(mean);
            s.sd = r > 0.0 ? std::sqrt(-2.0 * std::log(r)) : std::numeric_limits<double>::infinity();
        }
        out.push_back(s);
    }
    return out;
}

SimResult simulate(const OscillatorEnsemble& e, const GainGraph& g, const BlockPartition& blocks,
                   const SimConfig& cfg) {
    cfg.validate();
    e.validate(g.vertex_count());
    if (blocks.block_of_vertex.size() != g.vertex_count()) {
        throw ValidationError("partition does not match the graph");
    }
    const auto edges = flatten(g);
    const bool higher_order = e.K_prime != 0.0 && !e.simplex.empty();

    SimResult res;
    res.final_state = e;
    auto& th = res.final_state.thetas;
    for (auto& t : th) {
        t = wrap_phase(t);
    }
    auto record = [&](double t) {
        const auto op = order_parameter(th);
        TrajectoryPoint p{t, op.r, op.psi, {}};
        for (const auto& s : block_phase_stats(th, blocks)) {
            p.block_means.push_back(s.mean);
        }
        res.trajectory.push_back(std::move(p));
    };

    const auto total_steps = static_cast<std::size_t>(std::llround(cfg.t_max / cfg.dt));
    record(0.0);
    for (std::size_t s = 1; s <= total_steps; ++s) {
        rk4_step(res.final_state, edges, higher_order, cfg.dt, th);
        res.steps = s;
        res.t_final = static_cast<double>(s) * cfg.dt;
        if (!std::all_of(th.begin(), th.end(), [](double x) { return std::isfinite(x); })) {
            std::ostringstream msg;
            msg << "integration diverged at t = " << res.t_final << "; reduce dt (currently " << cfg.dt << ")";
            throw NumericalError(msg.str());
        }
        if (s % cfg.record_every == 0 || s == total_steps) {
            record(res.t_final);
            const auto& tr = res.trajectory;
            if (cfg.stop_on_plateau && tr.size() > cfg.plateau_window) {
                const auto first = tr.end() - static_cast<std::ptrdiff_t>(cfg.plateau_window);
                const auto [lo, hi] = std::minmax_element(first, tr.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
                if (hi->r - lo->r < cfg.convergence_threshold) {
                    res.plateaued = true;
                    break;
                }
            }
        }
    }
    res.blocks = block_phase_stats(th, blocks);
    return res;
}

}  // namespace qlgraph
