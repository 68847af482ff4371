#include <gtest/gtest.h>

#include "qlgraph/errors.hpp"
#include "qlgraph/gain_graph.hpp"
#include "qlgraph/regular.hpp"
#include "qlgraph/spectral.hpp"

using namespace qlgraph;

namespace {

GainGraph complete_graph(std::size_t n) {
    GainGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace

TEST(GainGraph, SingleEdgeAdjacency) {
    GainGraph g(2);
    g.add_edge(0, 1);
    Eigen::Matrix2cd expected;
    expected << 0, 1, 1, 0;
    EXPECT_EQ(adjacency_matrix(g), Eigen::MatrixXcd(expected));
}

TEST(GainGraph, ImaginaryGainHasConjugatePartner) {
    GainGraph g(2);
    g.add_edge(0, 1, Complex(0, 1));
    const auto a = adjacency_matrix(g);
    EXPECT_EQ(a(0, 1), Complex(0, 1));
    EXPECT_EQ(a(1, 0), Complex(0, -1));
    EXPECT_EQ(a(0, 0), Complex(0, 0));
}

TEST(GainGraph, ReversedInsertionStoresConjugate) {
    GainGraph g(3);
    g.add_edge(2, 0, Complex(0, 1));
    EXPECT_EQ(g.gain(2, 0), Complex(0, 1));
    EXPECT_EQ(g.gain(0, 2), Complex(0, -1));
    EXPECT_EQ(g.edges().begin()->first, (VertexPair{0, 2}));
}

TEST(GainGraph, RejectsInvalidEdges) {
    GainGraph g(3);
    EXPECT_THROW(g.add_edge(1, 1), ValidationError);
    EXPECT_THROW(g.add_edge(0, 3), ValidationError);
    EXPECT_THROW(g.add_edge(0, 1, Complex(1.0 + 1e-9, 0)), ValidationError);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), ValidationError);
    EXPECT_NO_THROW(g.add_edge(0, 2, std::polar(1.0, 0.3)));
}

TEST(GainGraph, K4Spectrum) {
    const auto s = eigendecompose(complete_graph(4));
    EXPECT_NEAR(s.eigenvalues(0), 3.0, 1e-12);
    for (int k = 1; k < 4; ++k) {
        EXPECT_NEAR(s.eigenvalues(k), -1.0, 1e-12);
    }
}

TEST(GainGraph, ScaleEdges) {
    const auto k4 = complete_graph(4);
    EXPECT_THROW(scale_edges(k4, 0.0), ValidationError);
    EXPECT_THROW(scale_edges(k4, -1.0), ValidationError);
    const auto same = eigendecompose(adjacency_matrix(scale_edges(k4, 1.0)));
    EXPECT_NEAR(same.eigenvalues(0), 3.0, 1e-12);
    const auto half = eigendecompose(adjacency_matrix(scale_edges(k4, 0.5)));
    EXPECT_NEAR(half.eigenvalues(0), 1.5, 1e-12);
    for (int k = 1; k < 4; ++k) {
        EXPECT_NEAR(half.eigenvalues(k), -0.5, 1e-12);
    }
}

TEST(GainGraph, ScaledRegularGraphTopEigenvalue) {
    const auto g = generate_d_regular(30, 8, 11);
    const auto s = eigendecompose(adjacency_matrix(scale_edges(g, 0.01)));
    EXPECT_NEAR(s.eigenvalues(0), 0.08, 1e-9);
}

TEST(GainGraph, HermitianReconstruction) {
    GainGraph g(6);
    int k = 0;
    for (std::size_t u = 0; u < 6; ++u) {
        for (std::size_t v = u + 1; v < 6; v += 2) {
            g.add_edge(u, v, std::polar(1.0, 0.37 * ++k));
        }
    }
    const auto a = adjacency_matrix(g);
    EXPECT_LT((a - a.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(GainGraph, WeightedGraphEntries) {
    GainGraph g(3);
    g.add_edge(0, 1, Complex(0, 1));
    WeightedGraph w(g);
    w.set_weight(1, 0, 0.25);
    w.add_edge(1, 2, 1.0, 2.0);
    EXPECT_EQ(w.entry(0, 1), Complex(0, 0.25));
    EXPECT_EQ(w.entry(1, 0), Complex(0, -0.25));
    EXPECT_EQ(w.entry(2, 1), Complex(2.0, 0));
    EXPECT_THROW(w.set_weight(0, 2, 1.0), ValidationError);
    EXPECT_THROW(w.set_weight(0, 1, 0.0), ValidationError);
}

TEST(GainGraph, ConnectedComponents) {
    GainGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    EXPECT_EQ(connected_components(c4).count, 1u);
    EXPECT_EQ(connected_components(GainGraph(4)).count, 4u);

    GainGraph two(5);
    two.add_edge(3, 1);
    two.add_edge(0, 4);
    const auto census = connected_components(two);
    EXPECT_EQ(census.count, 3u);
    EXPECT_EQ(census.component_of, (std::vector<std::size_t>{0, 1, 2, 1, 0}));
}

TEST(GainGraph, BlockPartitionFromLabels) {
    GainGraph g(4);
    g.set_label(0, "x");
    g.set_label(1, "y");
    g.set_label(2, "x");
    g.set_label(3, "z");
    const auto p = BlockPartition::from_labels(g);
    EXPECT_EQ(p.names, (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(p.block_of_vertex, (std::vector<std::size_t>{0, 1, 0, 2}));
    EXPECT_EQ(BlockPartition::from_labels(GainGraph(3)).block_count(), 1u);
}
