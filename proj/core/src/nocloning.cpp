#include "qlgraph/nocloning.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qlgraph/errors.hpp"

namespace qlgraph {

double wrap_angle(double x) {
    double r = std::remainder(x, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r += 2.0 * std::numbers::pi;
    }
    return r;
}

namespace {

std::string variable_name(std::size_t var, std::size_t n0) {
    std::ostringstream out;
    out << "theta(" << var / n0 << "," << var % n0 << ")";
    return out.str();
}

}  // namespace

std::string PhaseConstraint::describe(std::size_t n0) const {
    std::ostringstream out;
    out << variable_name(v, n0) << " - " << variable_name(u, n0) << " = " << offset;
    if (kind == ConstraintKind::invariance) {
        out << "  [* block " << block_u << "," << block_v << " unchanged]";
    } else {
        out << "  [block " << block_u << " copy must become G_A]";
    }
    return out.str();
}

std::string InfeasibilityWitness::describe(std::size_t n0) const {
    std::ostringstream out;
    out << "required " << conflicting.describe(n0) << "\n"
        << "but the other constraints force " << variable_name(conflicting.v, n0) << " - "
        << variable_name(conflicting.u, n0) << " = " << implied << " via:";
    for (const auto& c : path) {
        out << "\n  " << c.describe(n0);
    }
    return out.str();
}

PhaseConstraintSystem build_clone_constraints(const GainGraph& ga, const GainGraph& gb) {
    const auto n0 = ga.vertex_count();
    if (n0 < 2) {
        throw ValidationError("the cloning constraint system needs n0 >= 2");
    }
    if (gb.vertex_count() != n0) {
        throw ValidationError("G_A and G_B must have the same number of vertices");
    }
    if (ga.edge_count() != gb.edge_count()) {
        throw ValidationError("G_A and G_B must share their edge set");
    }
    for (const auto& [key, gain] : ga.edges()) {
        if (!gb.has_edge(key.lo, key.hi)) {
            throw ValidationError("G_A and G_B must share their edge set");
        }
    }

    PhaseConstraintSystem sys;
    sys.n0 = n0;
    // [*]_{kl} is g_A(k,l) times the identity; its first row reads
    // e^{i(theta(l,x) - theta(k,0))} after conjugation and must equal 1.
    for (const auto& [key, gain] : ga.edges()) {
        for (const auto& [k, l] : {std::pair{key.lo, key.hi}, std::pair{key.hi, key.lo}}) {
            for (std::size_t x = 0; x < n0; ++x) {
                sys.constraints.push_back({k * n0, l * n0 + x, 0.0, ConstraintKind::invariance, k, l});
            }
        }
    }
    for (std::size_t k = 0; k < n0; ++k) {
        for (const auto& [key, gain_b] : gb.edges()) {
            const double offset = wrap_angle(std::arg(ga.gain(key.lo, key.hi) / gain_b));
            sys.constraints.push_back({k * n0 + key.lo, k * n0 + key.hi, offset, ConstraintKind::block_identity, k, k});
        }
    }
    return sys;
}

namespace {

class PotentialUnionFind {
public:
    explicit PotentialUnionFind(std::size_t n) : parent_(n), potential_(n, 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            parent_[i] = i;
        }
    }

    /// Root of x and theta[x] - theta[root].
    std::pair<std::size_t, double> find(std::size_t x) {
        double acc = 0.0;
        std::size_t r = x;
        while (parent_[r] != r) {
            acc += potential_[r];
            r = parent_[r];
        }
        // Path compression.
        double remaining = acc;
        while (parent_[x] != x) {
            const auto next = parent_[x];
            const double step = potential_[x];
            parent_[x] = r;
            potential_[x] = wrap_angle(remaining);
            remaining -= step;
            x = next;
        }
        return {r, wrap_angle(acc)};
    }

    /// Records theta[v] - theta[u] = offset for u and v in different sets.
    void unite(std::size_t u, std::size_t v, double offset) {
        const auto [ru, pu] = find(u);
        const auto [rv, pv] = find(v);
        parent_[rv] = ru;
        potential_[rv] = wrap_angle(pu + offset - pv);
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<double> potential_;
};

std::vector<PhaseConstraint> connecting_path(const std::vector<PhaseConstraint>& accepted, std::size_t n,
                                             std::size_t from, std::size_t to) {
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        incident[accepted[i].u].push_back(i);
        incident[accepted[i].v].push_back(i);
    }
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(n, unset);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{from};
    seen[from] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
        const auto x = queue[head];
        for (auto ci : incident[x]) {
            const auto y = accepted[ci].u == x ? accepted[ci].v : accepted[ci].u;
            if (!seen[y]) {
                seen[y] = true;
                via[y] = ci;
                queue.push_back(y);
            }
        }
    }
    std::vector<PhaseConstraint> path;
    for (auto x = to; x != from && via[x] != unset;) {
        const auto& c = accepted[via[x]];
        path.push_back(c);
        x = c.u == x ? c.v : c.u;
    }
    return {path.rbegin(), path.rend()};
}

}  // namespace

CloneVerdict solve_phase_constraints(const PhaseConstraintSystem& system, double tol) {
    const auto n = system.variable_count();
    for (const auto& c : system.constraints) {
        if (c.u >= n || c.v >= n || c.u == c.v || !std::isfinite(c.offset)) {
            throw ValidationError("malformed phase constraint");
        }
    }
    PotentialUnionFind uf(n);
    std::vector<PhaseConstraint> accepted;
    CloneVerdict verdict;

    for (auto kind : {ConstraintKind::invariance, ConstraintKind::block_identity}) {
        for (const auto& c : system.constraints) {
            if (c.kind != kind) {
                continue;
            }
            const auto [ru, pu] = uf.find(c.u);
            const auto [rv, pv] = uf.find(c.v);
            if (ru != rv) {
                uf.unite(c.u, c.v, c.offset);
                accepted.push_back(c);
                continue;
            }
            const double implied = wrap_angle(pv - pu);
            if (std::abs(wrap_angle(implied - c.offset)) > tol) {
                InfeasibilityWitness w;
                w.conflicting = c;
                w.implied = implied;
                w.path = connecting_path(accepted, n, c.u, c.v);
                verdict.witness = w;
                return verdict;
            }
        }
    }

    verdict.feasible = true;
    verdict.phases.resize(n);
    const auto [root0, p0] = uf.find(0);
    for (std::size_t x = 0; x < n; ++x) {
        const auto [r, p] = uf.find(x);
        verdict.phases[x] = r == root0 ? wrap_angle(p - p0) : p;
    }
    return verdict;
}

CloneVerdict no_cloning_check(const GainGraph& ga, const GainGraph& gb) {
    return solve_phase_constraints(build_clone_constraints(ga, gb));
}

}  // namespace qlgraph
