#include <gtest/gtest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "qlgraph/entanglement.hpp"
#include "qlgraph/errors.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/rng.hpp"
#include "qlgraph/spectral.hpp"

using namespace qlgraph;

namespace {

Eigen::Vector4cd random_state(Rng& rng) {
    std::normal_distribution<double> g;
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) {
        v(i) = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

Eigen::Vector2cd random_qubit(Rng& rng) {
    std::normal_distribution<double> g;
    Eigen::Vector2cd v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
    return v / v.norm();
}

QLBit bit(std::size_t n, std::size_t d, std::uint64_t seed, std::string name) {
    QLBitSpec s;
    s.n_per_subgraph = n;
    s.degree = d;
    s.coupling_probability = 0.2;
    s.rng_seed = seed;
    s.name = std::move(name);
    return build_ql_bit(s);
}

}  // namespace

TEST(Concurrence, Examples) {
    EXPECT_NEAR(concurrence(Eigen::Vector4cd(0.5, 0.5, 0.5, 0.5)), 0.0, 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(concurrence(Eigen::Vector4cd(r, 0, 0, r)), 1.0, 1e-15);
    // Coefficients 0.43 on (a1b1, a2b2), 0.56 on (a1b2, a2b1), renormalized.
    Eigen::Vector4cd v2(0.43, 0.56, 0.56, 0.43);
    v2 /= v2.norm();
    const double expected = 2.0 * std::abs(v2(0).real() * v2(3).real() - v2(1).real() * v2(2).real());
    EXPECT_NEAR(concurrence(v2), expected, 1e-15);
    EXPECT_NEAR(concurrence(v2), 0.26, 0.02);
    EXPECT_THROW(concurrence(Eigen::Vector4cd(1, 1, 0, 0)), ValidationError);
}

TEST(Concurrence, AgreesWithPurityOracle) {
    auto rng = make_rng(3, 0);
    for (int k = 0; k < 200; ++k) {
        const auto v = random_state(rng);
        EXPECT_NEAR(concurrence(v), oracle::concurrence_by_purity(v), 1e-10);
    }
}

TEST(Concurrence, ProductStatesVanish) {
    auto rng = make_rng(4, 0);
    for (int k = 0; k < 500; ++k) {
        const auto a = random_qubit(rng);
        const auto b = random_qubit(rng);
        const Eigen::Vector4cd v(a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1));
        EXPECT_LT(concurrence(v), 1e-10);
    }
}

TEST(Concurrence, LocalPhaseInvariance) {
    auto rng = make_rng(5, 0);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    for (int k = 0; k < 100; ++k) {
        const auto v = random_state(rng);
        Eigen::Vector4cd w = v;
        const Complex phase = std::polar(1.0, angle(rng));
        w(0) *= phase;
        w(1) *= phase;
        EXPECT_LT(std::abs(concurrence(v) - concurrence(w)), 1e-12);
    }
}

TEST(Concurrence, StateFromProjection) {
    const auto s = TwoBitState::from_projection(Eigen::Vector4cd(Complex(0, 0.5), Complex(0, 0.5), Complex(0, 0.5),
                                                                 Complex(0, 0.5)));
    EXPECT_NEAR(s.alpha(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(s.alpha(1, 1).imag(), 0.0, 1e-15);
    EXPECT_NEAR(s.diagonal_magnitude(), 0.5, 1e-15);
    EXPECT_NEAR(s.off_diagonal_magnitude(), 0.5, 1e-15);
    EXPECT_THROW(TwoBitState::from_projection(Eigen::Vector3cd(1, 0, 0)), ValidationError);
}

TEST(Experiment, RejectsExtraEdgesInCouplingBlocks) {
    const auto a = bit(20, 6, 1, "a");
    const auto b = bit(20, 6, 2, "b");
    const auto p = optimized_product({a, b}, ProductLayout::tensor, 3);
    // Block a1b1 is [0, 20), a1b2 is [20, 40).
    EXPECT_THROW(nonseparable_experiment(p, {{0, 20}}, 1.0), ValidationError);
    EXPECT_THROW(nonseparable_experiment(p, {{20, 40}}, 0.0), ValidationError);
    EXPECT_NO_THROW(nonseparable_experiment(p, {{20, 40}}, 1.0));
}

TEST(Experiment, SeparableBaseHasZeroConcurrence) {
    const auto a = bit(20, 6, 1, "a");
    const auto b = bit(20, 6, 2, "b");
    const auto p = optimized_product({a, b}, ProductLayout::tensor, 3);
    const auto r = nonseparable_experiment(p, {}, 1.0);
    EXPECT_LT(r.concurrence, 1e-6);
    EXPECT_EQ(r.extra_edges, 0u);
}

TEST(Experiment, ExtraEdgesEntangle) {
    const auto a = bit(20, 6, 1, "a");
    const auto b = bit(20, 6, 2, "b");
    const auto p = optimized_product({a, b}, ProductLayout::tensor, 3);
    const auto extras = sample_block_edges(p, 1, 2, 0.2, 9);
    EXPECT_GT(extras.size(), 0u);
    for (const auto& [u, v] : extras) {
        EXPECT_EQ(p.block_of_vertex[u], 1u);
        EXPECT_EQ(p.block_of_vertex[v], 2u);
    }
    const auto plain = nonseparable_experiment(p, extras, 1.0);
    const auto weighted = nonseparable_experiment(p, extras, 0.01);
    EXPECT_GT(plain.concurrence, 0.05);
    EXPECT_GT(weighted.concurrence, plain.concurrence);
    EXPECT_GT(weighted.state.off_diagonal_magnitude(), weighted.state.diagonal_magnitude());
}

TEST(Experiment, Presets) {
    EXPECT_EQ(preset_experiment("paper-v1").extra_probability, 0.0);
    EXPECT_EQ(preset_experiment("paper-v2").inherited_weight, 1.0);
    EXPECT_EQ(preset_experiment("paper-v3").inherited_weight, 0.01);
    EXPECT_EQ(preset_experiment("paper-v3").n_per_subgraph, 60u);
    EXPECT_EQ(preset_experiment("paper-v3").degree, 40u);
    EXPECT_THROW(preset_experiment("v4"), ValidationError);
}

TEST(Experiment, EnsembleIsDeterministic) {
    auto cfg = preset_experiment("paper-v2");
    cfg.n_per_subgraph = 20;
    cfg.degree = 6;
    const auto a = run_ensemble(cfg, {1, 2, 3});
    const auto b = run_ensemble(cfg, {1, 2, 3});
    ASSERT_EQ(a.runs.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(a.runs[k].seed, k + 1);
        EXPECT_EQ(a.runs[k].concurrence, b.runs[k].concurrence);
    }
    EXPECT_GE(a.sd_concurrence, 0.0);
}

TEST(Cnot, Equation15To17) {
    const auto sep = separable_block_matrix();
    EXPECT_EQ(sep.basis, natural_basis());
    const auto out = cnot_transform(sep);
    EXPECT_EQ(out.basis, reordered_basis());
    // In the reordered basis (a1b1, a2b2, a2b1, a1b2) the coupling sits in the
    // off-diagonal 2x2 blocks: a1b1 and a2b2 each touch a2b1 and a1b2.
    Eigen::Matrix4cd expected;
    expected << 0, 0, 1, 1,
                0, 0, 1, 1,
                1, 1, 0, 0,
                1, 1, 0, 0;
    EXPECT_LT((out.m - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Cnot, InvolutionZeroAndSpectrum) {
    const auto sep = separable_block_matrix();
    const auto twice = cnot_transform(cnot_transform(sep));
    EXPECT_EQ(twice.basis, sep.basis);
    EXPECT_LT((twice.m - sep.m).cwiseAbs().maxCoeff(), 1e-15);

    BlockMatrix zero{Eigen::MatrixXcd::Zero(4, 4), natural_basis()};
    EXPECT_EQ(cnot_transform(zero).m, Eigen::MatrixXcd::Zero(4, 4));

    const auto before = eigendecompose(sep.m).eigenvalues;
    const auto after = eigendecompose(cnot_transform(sep).m).eigenvalues;
    EXPECT_LT((before - after).cwiseAbs().maxCoeff(), 1e-10);

    BlockMatrix bad{sep.m, {"x", "y", "z", "w"}};
    EXPECT_THROW(cnot_transform(bad), ValidationError);
}

TEST(Cnot, UnitaryIsPermutation) {
    const auto u = cnot_unitary();
    EXPECT_LT((u * u.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(u(1, 3), 1.0);
    EXPECT_EQ(u(3, 1), 1.0);
    EXPECT_EQ(u(0, 0), 1.0);
    EXPECT_EQ(u(2, 2), 1.0);
}

TEST(Cnot, GraphLevelConservesEdges) {
    const auto a = bit(20, 6, 1, "a");
    const auto b = bit(20, 6, 2, "b");
    const auto p = optimized_product({a, b}, ProductLayout::tensor, 3);
    const auto bg = to_block_graph(p);
    const auto moved = cnot_transform(bg);
    EXPECT_EQ(moved.graph.edge_count(), bg.graph.edge_count());
    const auto ev_before = eigendecompose(bg.graph).eigenvalues;
    const auto ev_after = eigendecompose(moved.graph).eigenvalues;
    EXPECT_LT((ev_before - ev_after).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Components, SmallGraphs) {
    GainGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    EXPECT_EQ(connected_components(c4).count, 1u);
    EXPECT_EQ(connected_components(GainGraph(4)).count, 4u);
    const auto pattern = block_pattern_graph(cnot_transform(separable_block_matrix()));
    EXPECT_EQ(pattern.edge_count(), 4u);
}
