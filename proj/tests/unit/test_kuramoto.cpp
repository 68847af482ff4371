#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlgraph/errors.hpp"
#include "qlgraph/kuramoto.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/regular.hpp"
#include "qlgraph/spectral.hpp"

using namespace qlgraph;

namespace {

OscillatorEnsemble ensemble(std::vector<double> thetas, double K, double K_prime = 0.0) {
    OscillatorEnsemble e;
    e.epsilons.assign(thetas.size(), 0.0);
    e.thetas = std::move(thetas);
    e.K = K;
    e.K_prime = K_prime;
    return e;
}

QLBit small_bit(Complex c = 1.0) {
    QLBitSpec s;
    s.n_per_subgraph = 30;
    s.degree = 8;
    s.coupling_bias = c;
    s.coupling_probability = 0.2;
    s.rng_seed = 3;
    return build_ql_bit(s);
}

double max_phase_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(wrap_phase(a[i] - b[i])));
    }
    return m;
}

}  // namespace

TEST(Kuramoto, TwoOscillatorsAttract) {
    GainGraph g(2);
    g.add_edge(0, 1);
    const auto e = ensemble({0.0, 0.2}, 1.0);
    const auto next = step_pairwise(e, g, 0.01);
    EXPECT_LT(std::abs(next.thetas[1] - next.thetas[0]), 0.2);
}

TEST(Kuramoto, EqualPhasesAreFixed) {
    const auto bit = small_bit();
    const auto e = ensemble(std::vector<double>(60, 0.7), 5.0);
    const auto next = step_pairwise(e, bit.graph, 0.01);
    for (double t : next.thetas) {
        EXPECT_NEAR(t, 0.7, 1e-15);
    }
}

TEST(Kuramoto, HigherOrderReducesToPairwise) {
    const auto bit = small_bit();
    auto e = random_ensemble(60, 5.0, 4);
    e.simplex.push_back({0, 1, 2, 3});
    const auto a = step_pairwise(e, bit.graph, 0.01);
    const auto b = step_higher_order(e, bit.graph, 0.01);
    EXPECT_EQ(a.thetas, b.thetas);
}

TEST(Kuramoto, SimplexTermFixedPointAndDecay) {
    GainGraph g(4);
    auto equal = ensemble({0.3, 0.3, 0.3, 0.3}, 0.0, 1.0);
    equal.simplex.push_back({0, 1, 2, 3});
    EXPECT_EQ(step_higher_order(equal, g, 0.01).thetas, equal.thetas);

    auto e = ensemble({0.0, 0.05, 0.0, 0.0}, 0.0, 64.0);
    e.simplex.push_back({0, 1, 2, 3});
    auto combo = [](const OscillatorEnsemble& x) {
        return x.thetas[1] - x.thetas[0] + x.thetas[2] - x.thetas[3];
    };
    const double start = std::abs(combo(e));
    for (int k = 0; k < 200; ++k) {
        e = step_higher_order(e, g, 0.01);
    }
    EXPECT_LT(std::abs(combo(e)), start);
}

TEST(Kuramoto, SimplexRhsMatchesFiniteDifference) {
    GainGraph g(4);
    auto e = ensemble({0.1, 0.4, -0.2, 0.3}, 0.0, 2.0);
    e.simplex.push_back({0, 1, 2, 3});
    const auto rhs = kuramoto_rhs(e, e.thetas, g);
    const double arg = e.thetas[1] - e.thetas[0] + e.thetas[2] - e.thetas[3];
    EXPECT_NEAR(rhs[0], 2.0 / 64.0 * std::sin(arg), 1e-15);
    EXPECT_NEAR(rhs[1], 0.0, 1e-15);
}

TEST(Kuramoto, RejectsBadInput) {
    GainGraph g(3);
    auto e = ensemble({0.0, 0.0}, 1.0);
    EXPECT_THROW(step_pairwise(e, g, 0.01), ValidationError);
    auto f = ensemble({0.0, 0.0, 0.0}, 1.0);
    f.epsilons = {1.0, 0.0, 0.0};
    EXPECT_THROW(step_pairwise(f, g, 0.01), ValidationError);
    auto h = ensemble({0.0, 0.0, 0.0}, 0.0, 1.0);
    h.simplex.push_back({0, 1, 2, 5});
    EXPECT_THROW(step_higher_order(h, g, 0.01), ValidationError);
    SimConfig cfg;
    cfg.dt = 0.0;
    EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(Kuramoto, OrderParameter) {
    EXPECT_NEAR(order_parameter(std::vector<double>(5, 1.2)).r, 1.0, 1e-15);
    EXPECT_NEAR(order_parameter(std::vector<double>(5, 1.2)).psi, 1.2, 1e-15);
    std::vector<double> spaced;
    for (int k = 0; k < 12; ++k) {
        spaced.push_back(2.0 * std::numbers::pi * k / 12.0);
    }
    EXPECT_NEAR(order_parameter(spaced).r, 0.0, 1e-15);
    EXPECT_NEAR(order_parameter(std::vector<double>{0.0, 0.0, std::numbers::pi, std::numbers::pi}).r, 0.0, 1e-15);
}

TEST(Kuramoto, QLBitSynchronizes) {
    const auto bit = small_bit();
    const auto e = random_ensemble(60, 5.0, 11);
    SimConfig cfg;
    cfg.t_max = 50.0;
    cfg.stop_on_plateau = false;
    const auto r = simulate(e, bit.graph, bit.blocks(), cfg);
    EXPECT_GT(order_parameter(r.final_state).r, 0.99);
    ASSERT_EQ(r.blocks.size(), 2u);
    for (const auto& b : r.blocks) {
        EXPECT_LT(b.sd, 0.01);
    }
    EXPECT_NEAR(r.t_final, 50.0, 1e-9);
    EXPECT_FALSE(r.trajectory.empty());
    EXPECT_EQ(r.trajectory.front().block_means.size(), 2u);
}

TEST(Kuramoto, PlateauStopsEarly) {
    const auto bit = small_bit();
    const auto r = simulate(random_ensemble(60, 5.0, 12), bit.graph, bit.blocks(), SimConfig{});
    EXPECT_TRUE(r.plateaued);
    EXPECT_LT(r.t_final, 200.0);
}

TEST(Kuramoto, DisconnectedClustersDrift) {
    GainGraph g(20);
    for (std::size_t base : {0u, 10u}) {
        for (std::size_t u = 0; u < 10; ++u) {
            for (std::size_t v = u + 1; v < 10; ++v) {
                g.add_edge(base + u, base + v);
            }
        }
    }
    auto e = random_ensemble(20, 5.0, 13);
    for (std::size_t i = 0; i < 20; ++i) {
        e.epsilons[i] = i < 10 ? 0.5 : -0.5;
    }
    SimConfig cfg;
    cfg.t_max = 60.0;
    cfg.stop_on_plateau = false;
    const auto r = simulate(e, g, BlockPartition::single_block(20), cfg);
    double min_r = 1.0;
    for (std::size_t k = r.trajectory.size() / 2; k < r.trajectory.size(); ++k) {
        min_r = std::min(min_r, r.trajectory[k].r);
    }
    EXPECT_LT(min_r, 0.5);
}

TEST(Kuramoto, ZeroCouplingKeepsPhases) {
    const auto bit = small_bit();
    const auto e = random_ensemble(60, 0.0, 14);
    SimConfig cfg;
    cfg.t_max = 5.0;
    cfg.stop_on_plateau = false;
    const auto r = simulate(e, bit.graph, bit.blocks(), cfg);
    EXPECT_EQ(r.final_state.thetas, e.thetas);
}

TEST(Kuramoto, MeanPhaseConserved) {
    const auto g = generate_d_regular(20, 4, 5);
    auto e = random_ensemble(20, 2.0, 15);
    for (auto& t : e.thetas) {
        t *= 0.3;  // stay away from the branch cut so the plain mean is meaningful
    }
    auto mean = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) {
            s += v;
        }
        return s / static_cast<double>(x.size());
    };
    const double start = mean(e.thetas);
    for (int k = 0; k < 10000; ++k) {
        e = step_pairwise(e, g, 0.01);
    }
    EXPECT_NEAR(mean(e.thetas), start, 1e-6);
}

TEST(Kuramoto, FourthOrderConvergence) {
    const auto g = generate_d_regular(10, 3, 2);
    auto e0 = random_ensemble(10, 3.0, 16);
    for (std::size_t i = 0; i < 10; ++i) {
        e0.epsilons[i] = 0.1 * (static_cast<double>(i) - 4.5);
    }
    const double t_end = 1.0;
    auto run = [&](double dt) {
        auto e = e0;
        const int steps = static_cast<int>(std::lround(t_end / dt));
        for (int k = 0; k < steps; ++k) {
            e = step_pairwise(e, g, dt);
        }
        return e.thetas;
    };
    const double dt = 0.1;
    const auto ref = run(dt / 8.0);
    const double coarse = max_phase_gap(run(dt), ref);
    const double fine = max_phase_gap(run(dt / 2.0), ref);
    EXPECT_GT(coarse / fine, 12.0);
    EXPECT_LT(coarse / fine, 20.0);
}

TEST(Kuramoto, PhasesToGains) {
    GainGraph one(2);
    one.add_edge(0, 1);
    const auto flipped = phases_to_gains(one, {0.0, std::numbers::pi});
    EXPECT_NEAR(std::abs(flipped.gain(0, 1) + 1.0), 0.0, 1e-15);

    const auto bit = small_bit(Complex(0, 1));
    EXPECT_EQ(phases_to_gains(bit.graph, std::vector<double>(60, 0.4)).edges().size(), bit.graph.edge_count());
    const auto same = phases_to_gains(bit.graph, std::vector<double>(60, 0.4));
    for (const auto& [key, gain] : same.edges()) {
        EXPECT_NEAR(std::abs(gain - bit.graph.gain(key.lo, key.hi)), 0.0, 1e-15);
    }

    const double phi = 0.9;
    std::vector<double> thetas(60, 0.0);
    for (std::size_t v = 30; v < 60; ++v) {
        thetas[v] = phi;
    }
    const auto rotated = phases_to_gains(bit.graph, thetas);
    const auto before = eigendecompose(bit.graph).eigenvalues;
    const auto after = eigendecompose(rotated).eigenvalues;
    EXPECT_LT((before - after).cwiseAbs().maxCoeff(), 1e-10);

    const auto proj = emergent_state(rotated, bit.blocks()).projection;
    const Complex c(0, 1);
    const Eigen::Vector2cd expected(1.0 / std::sqrt(2.0), std::polar(1.0, phi) * std::conj(c) / std::sqrt(2.0));
    const auto original = emergent_state(bit).projection;
    // Exact relation: the a2 block coefficient picks up e^{i phi}.
    EXPECT_NEAR(std::abs(proj(1) - original(1) * std::polar(1.0, phi)), 0.0, 1e-9);
    EXPECT_LT((proj - expected).cwiseAbs().maxCoeff(), 2e-2);
}

TEST(Kuramoto, WrapPhase) {
    EXPECT_NEAR(wrap_phase(-std::numbers::pi), std::numbers::pi, 1e-15);
    EXPECT_NEAR(wrap_phase(7.0), 7.0 - 2.0 * std::numbers::pi, 1e-15);
}
