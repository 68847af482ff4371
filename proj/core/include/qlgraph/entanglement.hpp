#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qlgraph/gain_graph.hpp"
#include "qlgraph/product.hpp"

namespace qlgraph {

/// Pure two-bit state over the basis (a1b1, a1b2, a2b1, a2b2).
struct TwoBitState {
    Eigen::Vector4cd amplitudes = Eigen::Vector4cd::Zero();

    /// Accepts a 4-entry projection; normalizes within the renormalization
    /// tolerance and fixes the global phase.
    static TwoBitState from_projection(const Eigen::VectorXcd& projection);
    Complex alpha(std::size_t i, std::size_t j) const { return amplitudes(static_cast<Eigen::Index>(2 * (i - 1) + (j - 1))); }
    /// Mean magnitude on (a1b1, a2b2).
    double diagonal_magnitude() const;
    /// Mean magnitude on (a1b2, a2b1).
    double off_diagonal_magnitude() const;
};

/// 2 |alpha11 alpha22 - alpha12 alpha21|. Rejects non-normalized states.
double concurrence(const TwoBitState& s);
double concurrence(const Eigen::Vector4cd& amplitudes);

struct ExperimentResult {
    std::uint64_t seed = 0;
    TwoBitState state;
    double concurrence = 0.0;
    double eigenvalue = 0.0;
    double gap = 0.0;
    std::size_t extra_edges = 0;
};

/// Weights every inherited inter-block (coupling) edge of a two-bit product by
/// `inherited_weight`, adds `extra_edges` with gain 1 and weight 1, and returns
/// the projected emergent state. Extra edges must join blocks whose codes
/// differ in both positions.
ExperimentResult nonseparable_experiment(const ProductGraph& base,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& extra_edges,
                                         double inherited_weight);

/// Bernoulli(probability) edges between every vertex pair of blocks `x` and `y`.
std::vector<std::pair<std::size_t, std::size_t>> sample_block_edges(const ProductGraph& base, std::size_t x,
                                                                    std::size_t y, double probability,
                                                                    std::uint64_t seed);

struct ExperimentConfig {
    std::string name = "custom";
    std::size_t n_per_subgraph = 60;
    std::size_t degree = 40;
    double coupling_probability = 0.2;
    Complex coupling_bias{1.0, 0.0};
    double inherited_weight = 1.0;
    /// Probability of each a1b2 -- a2b1 vertex pair receiving an extra edge.
    double extra_probability = 0.0;
};

/// The three experiments on two 60-vertex, 40-regular bits: separable (v1),
/// extra a1b2 -- a2b1 edges (v2), and extra edges with inherited coupling
/// weighted by 0.01 (v3).
ExperimentConfig preset_experiment(const std::string& name);

/// Builds the two bits and their tensor-layout optimized product from `seed`,
/// samples the extra edges and runs the experiment.
ExperimentResult run_experiment(const ExperimentConfig& config, std::uint64_t seed);

struct EnsembleSummary {
    ExperimentConfig config;
    std::vector<ExperimentResult> runs;
    double mean_concurrence = 0.0;
    double sd_concurrence = 0.0;
    double mean_diagonal = 0.0;
    double mean_off_diagonal = 0.0;
};

/// Runs one experiment per seed in parallel (see parallel.hpp).
EnsembleSummary run_ensemble(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds);

/// Block-level adjacency with an explicit basis labeling.
struct BlockMatrix {
    Eigen::MatrixXcd m;
    std::vector<std::string> basis;
};

const std::vector<std::string>& natural_basis();
/// (a1b1, a2b2, a2b1, a1b2).
const std::vector<std::string>& reordered_basis();

/// Block adjacency of the separable two-bit product, in the natural basis.
BlockMatrix separable_block_matrix();
/// The CNOT permutation: identity with indices 1 and 3 exchanged.
Eigen::Matrix4d cnot_unitary();

/// U A U^-1 with the basis label switched between the natural and reordered
/// orderings. Any other basis is rejected.
BlockMatrix cnot_transform(const BlockMatrix& a);

/// A graph whose vertices are grouped into four consecutive, equal blocks.
struct BlockGraph {
    GainGraph graph;
    BlockPartition blocks;
};

/// Two-bit product with contiguous blocks, labeled by the natural basis.
BlockGraph to_block_graph(const ProductGraph& p);
/// Graph-level analog: the vertex ranges of blocks 1 and 3 are exchanged.
BlockGraph cnot_transform(const BlockGraph& g);

/// Graph on the basis states with an edge wherever the block entry is nonzero.
GainGraph block_pattern_graph(const BlockMatrix& a);

}  // namespace qlgraph
