#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "qlgraph/errors.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/rng.hpp"
#include "qlgraph/spectral.hpp"
#include "qlgraph/su2.hpp"

using namespace qlgraph;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

double distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

JonesVector random_jones(Rng& rng) {
    std::normal_distribution<double> g;
    JonesVector j{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
    const double n = std::sqrt(std::norm(j.x) + std::norm(j.y));
    return {j.x / n, j.y / n};
}

Quaternion random_quaternion(Rng& rng) {
    const auto j = random_jones(rng);
    return {j.x.real(), j.x.imag(), j.y.real(), j.y.imag()};
}

}  // namespace

TEST(SU2, JonesToQuaternionExamples) {
    EXPECT_EQ(jones_to_quaternion({1.0, 0.0}), (Quaternion{1, 0, 0, 0}));
    const auto circ = jones_to_quaternion({kR, Complex(0, kR)});
    EXPECT_NEAR(circ.a, kR, 1e-15);
    EXPECT_EQ(circ.b, 0.0);
    EXPECT_EQ(circ.c, 0.0);
    EXPECT_NEAR(circ.d, kR, 1e-15);
    const auto q = jones_to_quaternion({0.6, Complex(0, 0.8)});
    EXPECT_NEAR(q.a, 0.6, 1e-15);
    EXPECT_NEAR(q.d, 0.8, 1e-15);
}

TEST(SU2, QuaternionToMatrixExamples) {
    EXPECT_EQ(quaternion_to_su2({1, 0, 0, 0}).m, Eigen::Matrix2cd::Identity());
    Eigen::Matrix2cd b;
    b << 0, -1, 1, 0;
    EXPECT_EQ(quaternion_to_su2({0, 1, 0, 0}).m, b);
    Eigen::Matrix2cd d;
    d << Complex(kR, kR), 0, 0, Complex(kR, -kR);
    EXPECT_LT(distance(quaternion_to_su2({kR, 0, 0, kR}).m, d), 1e-15);
}

TEST(SU2, StateExamples) {
    EXPECT_EQ(state_to_su2(1.0, 0.0).m, Eigen::Matrix2cd::Identity());
    Eigen::Matrix2cd e;
    e << kR, -kR, kR, kR;
    EXPECT_LT(distance(state_to_su2(kR, kR).m, e), 1e-15);
    Eigen::Matrix2cd c;
    c << kR, Complex(0, kR), Complex(0, kR), kR;
    EXPECT_LT(distance(state_to_su2(kR, Complex(0, kR)).m, c), 1e-15);
}

TEST(SU2, NormalizationBoundary) {
    EXPECT_NO_THROW(jones_to_quaternion({1.0 + 5e-7, 0.0}));
    const auto q = jones_to_quaternion({1.0 + 5e-7, 0.0});
    EXPECT_NEAR(q.norm_squared(), 1.0, 1e-14);
    EXPECT_THROW(jones_to_quaternion({1.0 + 1e-5, 0.0}), ValidationError);
    EXPECT_THROW(quaternion_to_su2({0.5, 0, 0, 0}), ValidationError);
    EXPECT_THROW(state_to_su2(1.0, 1.0), ValidationError);
}

TEST(SU2, RandomRoundTrips) {
    auto rng = make_rng(2024, 0);
    for (int k = 0; k < 1000; ++k) {
        const auto j = random_jones(rng);
        const auto q = jones_to_quaternion(j);
        const auto u = quaternion_to_su2(q);
        EXPECT_TRUE(u.is_valid(1e-10));
        const auto back = quaternion_to_jones(su2_to_quaternion(u));
        EXPECT_NEAR(std::abs(back.x - j.x), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(back.y - j.y), 0.0, 1e-12);
    }
}

TEST(SU2, MapIsHomomorphism) {
    const Quaternion i{0, 1, 0, 0};
    const Quaternion j{0, 0, 1, 0};
    const Quaternion k{0, 0, 0, 1};
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(i * i, (Quaternion{-1, 0, 0, 0}));

    auto rng = make_rng(7, 0);
    for (int n = 0; n < 200; ++n) {
        const auto p = random_quaternion(rng);
        const auto q = random_quaternion(rng);
        const auto lhs = quaternion_to_su2(p * q).m;
        const auto rhs = (quaternion_to_su2(p) * quaternion_to_su2(q)).m;
        EXPECT_LT(distance(lhs, rhs), 1e-12);
    }
}

TEST(SU2, StateClosure) {
    auto rng = make_rng(8, 0);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_jones(rng);
        const auto b = random_jones(rng);
        const auto u = state_to_su2(a.x, a.y) * state_to_su2(b.x, b.y);
        EXPECT_TRUE(u.is_valid(1e-10));
    }
}

TEST(SU2, NonUnitaryMatrixRejected) {
    SU2Element bad;
    bad.m << 2, 0, 0, 0.5;
    EXPECT_FALSE(bad.is_valid());
    EXPECT_THROW(su2_to_quaternion(bad), ValidationError);
}

TEST(SU2, BiasSweepGivesDistinctElements) {
    std::vector<Eigen::Matrix2cd> seen;
    for (int k = 0; k < 16; ++k) {
        QLBitSpec s;
        s.n_per_subgraph = 50;
        s.degree = 12;
        s.coupling_probability = 0.15;
        s.coupling_bias = std::polar(1.0, 2.0 * std::numbers::pi * k / 16.0);
        s.rng_seed = 5;
        const auto u = state_to_su2(Eigen::Vector2cd(emergent_state(build_ql_bit(s)).projection));
        EXPECT_TRUE(u.is_valid());
        for (const auto& other : seen) {
            EXPECT_GT(distance(other, u.m), 0.05);
        }
        seen.push_back(u.m);
    }
    EXPECT_EQ(seen.size(), 16u);
}
