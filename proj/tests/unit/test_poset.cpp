#include <gtest/gtest.h>

#include "qlgraph/errors.hpp"
#include "qlgraph/poset.hpp"
#include "qlgraph/product.hpp"

using namespace qlgraph;

TEST(Poset, RankTwo) {
    BooleanPoset p(2);
    EXPECT_EQ(p.size(), 4u);
    const auto covers = p.cover_relations();
    ASSERT_EQ(covers.size(), 4u);
    const auto e = BooleanPoset::from_elements({});
    const auto one = BooleanPoset::from_elements({1});
    const auto two = BooleanPoset::from_elements({2});
    const auto both = BooleanPoset::from_elements({1, 2});
    EXPECT_TRUE(p.covers(e, one));
    EXPECT_TRUE(p.covers(e, two));
    EXPECT_TRUE(p.covers(one, both));
    EXPECT_TRUE(p.covers(two, both));
    EXPECT_FALSE(p.covers(e, both));
    EXPECT_EQ(p.relations().size(), 5u);
}

TEST(Poset, Comparability) {
    BooleanPoset p(3);
    const auto s12 = BooleanPoset::from_elements({1, 2});
    EXPECT_TRUE(p.comparable(s12, BooleanPoset::from_elements({1, 2, 3})));
    EXPECT_FALSE(p.comparable(s12, BooleanPoset::from_elements({1, 3})));
    EXPECT_EQ(BooleanPoset::format(BooleanPoset::from_elements({1, 3})), "{1,3}");
    EXPECT_EQ(BooleanPoset::format(0), "{}");
    EXPECT_EQ(p.rank_of(s12), 2u);
}

TEST(Poset, HasseDiagramIsHypercube) {
    for (std::size_t q = 1; q <= 6; ++q) {
        BooleanPoset p(q);
        const auto h = p.hasse_graph();
        EXPECT_EQ(h.vertex_count(), std::size_t{1} << q);
        EXPECT_EQ(h.edge_count(), q << (q - 1));
        EXPECT_TRUE(hypercube_check(h, q).is_hypercube) << q;
    }
    EXPECT_EQ(BooleanPoset(3).hasse_graph().edge_count(), 12u);
}

TEST(Poset, RelationCount) {
    // Proper inclusions in B_q number 3^q - 2^q.
    for (std::size_t q = 1; q <= 6; ++q) {
        std::size_t three = 1;
        for (std::size_t k = 0; k < q; ++k) {
            three *= 3;
        }
        EXPECT_EQ(BooleanPoset(q).relations().size(), three - (std::size_t{1} << q));
    }
}

TEST(Poset, RankBounds) {
    EXPECT_THROW(BooleanPoset(0), ValidationError);
    EXPECT_THROW(BooleanPoset(11), ValidationError);
    EXPECT_NO_THROW(BooleanPoset(10));
    EXPECT_THROW(BooleanPoset::from_elements({0}), ValidationError);
}
