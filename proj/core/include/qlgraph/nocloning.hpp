#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

enum class ConstraintKind {
    /// A [*] block entry of the product must stay unchanged.
    invariance,
    /// A copy of G_B inside the product must turn into G_A.
    block_identity,
};

/// theta[v] - theta[u] == offset (mod 2 pi).
struct PhaseConstraint {
    std::size_t u = 0;
    std::size_t v = 0;
    double offset = 0.0;
    ConstraintKind kind = ConstraintKind::invariance;
    /// Product blocks (G_A vertices) holding u and v.
    std::size_t block_u = 0;
    std::size_t block_v = 0;

    std::string describe(std::size_t n0) const;
};

/// Phase variables of the product G_A x G_B under the diagonal unitary
/// diag(e^{i theta}); variable k * n0 + x sits at G_A vertex k, G_B vertex x.
struct PhaseConstraintSystem {
    std::size_t n0 = 0;
    std::vector<PhaseConstraint> constraints;

    std::size_t variable_count() const noexcept { return n0 * n0; }
};

/// Constraints for mapping every G_B copy of G_A x G_B onto G_A by phase
/// conjugation while leaving each [*] block unchanged. G_A and G_B must have
/// the same n0 >= 2 vertices and the same edge set; only gains may differ.
PhaseConstraintSystem build_clone_constraints(const GainGraph& ga, const GainGraph& gb);

struct InfeasibilityWitness {
    PhaseConstraint conflicting;
    /// Value of theta[v] - theta[u] forced by the constraints in `path`.
    double implied = 0.0;
    std::vector<PhaseConstraint> path;

    std::string describe(std::size_t n0) const;
};

struct CloneVerdict {
    bool feasible = false;
    /// One solution (theta_0 = 0) when feasible.
    std::vector<double> phases;
    std::optional<InfeasibilityWitness> witness;
};

/// Solves the difference system with a weighted union-find. Invariance
/// constraints are merged first, so a conflict always pits a block rotation
/// against the invariance relations.
CloneVerdict solve_phase_constraints(const PhaseConstraintSystem& system, double tol = 1e-9);
CloneVerdict no_cloning_check(const GainGraph& ga, const GainGraph& gb);

/// Representative of x modulo 2 pi in (-pi, pi].
double wrap_angle(double x);

}  // namespace qlgraph
