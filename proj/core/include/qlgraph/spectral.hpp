#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

struct QLBit;

inline constexpr std::size_t kMaxEigenDimension = 4096;
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues closer than this are not "distinguished".
inline constexpr double kDegeneracyThreshold = 1e-6;

struct Spectrum {
    /// Sorted in descending order.
    Eigen::VectorXd eigenvalues;
    /// Column k belongs to eigenvalues(k).
    Eigen::MatrixXcd eigenvectors;

    std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Largest |A(i,j) - conj(A(j,i))| over all entries.
double hermitian_asymmetry(const Eigen::MatrixXcd& a);

/// Full eigendecomposition of a Hermitian matrix.
///
/// Every eigenvector is phase-fixed (first entry of non-negligible modulus real
/// positive). Eigenvalues are sorted descending; ties within 1e-10 are ordered
/// lexicographically by the phase-fixed vectors.
Spectrum eigendecompose(const Eigen::MatrixXcd& a);
Spectrum eigendecompose(const GainGraph& g);

/// Rotates `v` by a global phase so its first entry with modulus above `tol`
/// becomes real positive.
void fix_phase(Eigen::VectorXcd& v, double tol = 1e-9);

struct EmergentState {
    double eigenvalue = 0.0;
    Eigen::VectorXcd vector;
    /// Distance to the nearest other eigenvalue.
    double gap = 0.0;
    /// Unit-norm block coefficients, phase fixed.
    Eigen::VectorXcd projection;
};

/// Sums the amplitudes of each block, normalizes over blocks and fixes the phase.
Eigen::VectorXcd block_projection(const Eigen::VectorXcd& v, const BlockPartition& blocks);

/// Top eigenpair of `a` projected onto `blocks`. Throws NumericalError when the
/// top eigenvalue is within kDegeneracyThreshold of the next one.
EmergentState emergent_state(const Eigen::MatrixXcd& a, const BlockPartition& blocks);
EmergentState emergent_state(const GainGraph& g, const BlockPartition& blocks);
EmergentState emergent_state(const WeightedGraph& g, const BlockPartition& blocks);
EmergentState emergent_state(const QLBit& bit);

/// The 2x2 matrix ((0, c), (conj(c), 0)).
Eigen::Matrix2cd effective_two_level(Complex c);
/// Phase-fixed top eigenvector of effective_two_level(c).
Eigen::Vector2cd ideal_projection(Complex c);

struct GapReport {
    double gap = 0.0;
    bool connected = true;
};

/// lambda_1 - lambda_2 together with a connectivity flag; a disconnected graph
/// is reported rather than rejected.
GapReport spectral_gap(const GainGraph& g);

}  // namespace qlgraph
