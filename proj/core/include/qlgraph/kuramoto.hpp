#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

/// One nonzero entry c_{ijlm} = 1 of the 4-index simplex tensor.
struct SimplexEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t l = 0;
    std::size_t m = 0;
};

struct OscillatorEnsemble {
    /// Radians, wrapped to (-pi, pi].
    std::vector<double> thetas;
    /// Frequency offsets from the mean frequency; must average to zero.
    std::vector<double> epsilons;
    double K = 0.0;
    double K_prime = 0.0;
    std::vector<SimplexEntry> simplex;

    std::size_t size() const noexcept { return thetas.size(); }
    /// Throws ValidationError on size mismatches, non-zero mean offset or
    /// out-of-range tensor indices.
    void validate(std::size_t n_vertices) const;
};

/// Uniformly random phases, zero offsets.
OscillatorEnsemble random_ensemble(std::size_t n, double K, std::uint64_t seed);

/// Right-hand side
///   d theta_i/dt = eps_i + (K/N) sum_{j ~ i} sin(theta_j - theta_i - arg a_ij)
///                + (K'/N^3) sum_{jlm} c_ijlm sin(theta_j - theta_i + theta_l - theta_m),
/// with the higher-order term skipped entirely when K' = 0.
std::vector<double> kuramoto_rhs(const OscillatorEnsemble& e, const std::vector<double>& thetas, const GainGraph& g);

/// One RK4 step of the pairwise dynamics (the simplex term is ignored).
OscillatorEnsemble step_pairwise(const OscillatorEnsemble& e, const GainGraph& g, double dt);
/// One RK4 step including the simplex term.
OscillatorEnsemble step_higher_order(const OscillatorEnsemble& e, const GainGraph& g, double dt);

struct OrderParameter {
    double r = 0.0;
    double psi = 0.0;
};

OrderParameter order_parameter(const std::vector<double>& thetas);
inline OrderParameter order_parameter(const OscillatorEnsemble& e) { return order_parameter(e.thetas); }

/// Gain (i, j) multiplied by e^{i(theta_i - theta_j)}: conjugation of the
/// adjacency matrix by diag(e^{i theta}).
GainGraph phases_to_gains(const GainGraph& g, const std::vector<double>& thetas);

struct SimConfig {
    double dt = 0.01;
    double t_max = 200.0;
    std::size_t record_every = 10;
    std::uint64_t seed = 0;
    double convergence_threshold = 1e-5;
    /// Recorded points over which r must stay within the threshold.
    std::size_t plateau_window = 100;
    bool stop_on_plateau = true;

    void validate() const;
};

struct TrajectoryPoint {
    double t = 0.0;
    double r = 0.0;
    double psi = 0.0;
    std::vector<double> block_means;
};

struct BlockPhaseStats {
    std::string name;
    /// Circular mean and circular standard deviation, radians.
    double mean = 0.0;
    double sd = 0.0;
};

struct SimResult {
    std::vector<TrajectoryPoint> trajectory;
    OscillatorEnsemble final_state;
    double t_final = 0.0;
    std::size_t steps = 0;
    bool plateaued = false;
    std::vector<BlockPhaseStats> blocks;
};

std::vector<BlockPhaseStats> block_phase_stats(const std::vector<double>& thetas, const BlockPartition& blocks);

/// Integrates with RK4 until t_max or an order-parameter plateau. Throws
/// NumericalError when a phase becomes non-finite.
SimResult simulate(const OscillatorEnsemble& e, const GainGraph& g, const BlockPartition& blocks,
                   const SimConfig& cfg);

/// Representative of x modulo 2 pi in (-pi, pi].
double wrap_phase(double x);

}  // namespace qlgraph
