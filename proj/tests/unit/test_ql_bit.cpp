#include <gtest/gtest.h>

#include <cmath>

#include "qlgraph/errors.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/regular.hpp"
#include "qlgraph/spectral.hpp"

using namespace qlgraph;

namespace {

QLBitSpec spec(std::size_t n, std::size_t d, Complex c, double p, std::uint64_t seed) {
    QLBitSpec s;
    s.n_per_subgraph = n;
    s.degree = d;
    s.coupling_bias = c;
    s.coupling_probability = p;
    s.rng_seed = seed;
    return s;
}

}  // namespace

TEST(QLBit, EdgeCounts) {
    const auto bit = build_ql_bit(spec(30, 8, 1.0, 0.2, 3));
    EXPECT_EQ(bit.graph.vertex_count(), 60u);
    const auto coupling = bit.coupling_edge_count();
    EXPECT_EQ(bit.graph.edge_count() - coupling, 240u);
    // Binomial(900, 0.2): mean 180, sd 12.
    EXPECT_NEAR(static_cast<double>(coupling), 180.0, 4.0 * 12.0);
}

TEST(QLBit, SubgraphsAreRegularWithUnitGains) {
    const auto bit = build_ql_bit(spec(30, 8, Complex(0, 1), 0.2, 3));
    const BlockPartition blocks = bit.blocks();
    for (std::size_t b = 0; b < 2; ++b) {
        std::vector<std::size_t> degree(60, 0);
        for (const auto& [key, gain] : bit.graph.edges()) {
            if (blocks.block_of_vertex[key.lo] == b && blocks.block_of_vertex[key.hi] == b) {
                EXPECT_EQ(gain, Complex(1.0, 0.0));
                ++degree[key.lo];
                ++degree[key.hi];
            }
        }
        for (auto v : bit.partition[b]) {
            EXPECT_EQ(degree[v], 8u);
        }
    }
}

TEST(QLBit, BiasDoesNotChangeEdgeSet) {
    const auto one = build_ql_bit(spec(30, 8, 1.0, 0.2, 3));
    const auto i = build_ql_bit(spec(30, 8, Complex(0, 1), 0.2, 3));
    ASSERT_EQ(one.graph.edge_count(), i.graph.edge_count());
    auto a = one.graph.edges().begin();
    for (const auto& [key, gain] : i.graph.edges()) {
        EXPECT_EQ(key, a->first);
        if (key.lo < 30 && key.hi >= 30) {
            EXPECT_EQ(gain, Complex(0, 1));
            EXPECT_EQ(i.graph.gain(key.hi, key.lo), Complex(0, -1));
        } else {
            EXPECT_EQ(gain, Complex(1, 0));
        }
        ++a;
    }
}

TEST(QLBit, Labels) {
    auto s = spec(10, 3, 1.0, 0.2, 1);
    s.name = "b";
    const auto bit = build_ql_bit(s);
    EXPECT_EQ(bit.graph.label(0), "b1");
    EXPECT_EQ(bit.graph.label(19), "b2");
    EXPECT_EQ(BlockPartition::from_labels(bit.graph).names, (std::vector<std::string>{"b1", "b2"}));
}

TEST(QLBit, SpecValidation) {
    EXPECT_THROW(build_ql_bit(spec(7, 3, 1.0, 0.1, 0)), ValidationError);
    EXPECT_THROW(build_ql_bit(spec(8, 8, 1.0, 0.1, 0)), ValidationError);
    EXPECT_THROW(build_ql_bit(spec(30, 8, 1.0, 0.0, 0)), ValidationError);
    EXPECT_THROW(build_ql_bit(spec(30, 8, 1.0, 1.5, 0)), ValidationError);
    EXPECT_THROW(build_ql_bit(spec(30, 8, 1.0, 0.5, 0)), ValidationError);  // p*n = 15 >= d
    EXPECT_THROW(build_ql_bit(spec(30, 8, Complex(0.5, 0.5), 0.2, 0)), ValidationError);
}

TEST(QLBit, UncoupledVerticesAreFlaggedNotFatal) {
    const auto bit = build_ql_bit(spec(20, 6, 1.0, 0.02, 5));
    EXPECT_TRUE(bit.has_uncoupled_vertices());
    EXPECT_EQ(bit.graph.vertex_count(), 40u);
}

TEST(QLBit, LargeSubstrate) {
    const auto bit = build_ql_bit(spec(60, 40, 1.0, 0.2, 8));
    EXPECT_EQ(bit.graph.vertex_count(), 120u);
    EXPECT_EQ(bit.graph.edge_count() - bit.coupling_edge_count(), 2u * 60u * 40u / 2u);
}

TEST(QLBit, TopEigenvalueSeparated) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto bit = build_ql_bit(spec(30, 8, 1.0, 0.2, seed));
        const auto s = eigendecompose(bit.graph);
        EXPECT_GT(s.eigenvalues(0) - s.eigenvalues(1), 1.0) << "seed " << seed;
    }
}
