#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromacode;

TEST(TupleIndex, BigEndianRoundTrip) {
    TupleIndex idx(5, 3);
    EXPECT_EQ(idx.size(), 125u);
    EXPECT_EQ(idx.block_size(), 25u);
    EXPECT_EQ(idx.encode({1, 2, 3}), 1u * 25 + 2u * 5 + 3u);
    for (std::size_t i = 0; i < idx.size(); ++i) EXPECT_EQ(idx.encode(idx.decode(i)), i);
}

TEST(OrPower, MatchesBruteForceDefinition) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 3 + trial % 4, 0.4);
        for (std::size_t n = 1; n <= 3; ++n) {
            const Graph gn = or_power(g, n);
            const auto ref = oracle::or_power_matrix(g, n);
            ASSERT_EQ(gn.vertex_count(), ref.size());
            for (std::size_t a = 0; a < ref.size(); ++a)
                for (std::size_t b = 0; b < ref.size(); ++b) ASSERT_EQ(gn.adjacent(a, b), ref[a][b]);
        }
    }
}

TEST(OrPower, RecordsTupleShape) {
    const Graph gn = or_power(make_cycle(4), 2);
    ASSERT_TRUE(gn.tuple_shape().has_value());
    EXPECT_EQ(gn.tuple_shape()->base, 4u);
    EXPECT_EQ(gn.tuple_shape()->length, 2u);
}

TEST(OrPower, GuardTrips) {
    EXPECT_THROW(or_power(make_cycle(10), 5, 10000), GuardExceeded);
    EXPECT_THROW(checked_power(10, 5, 10000), GuardExceeded);
    EXPECT_EQ(checked_power(10, 4, 10000), 10000u);
}

TEST(OrPower, BlocksAreCopiesOfThePreviousPower) {
    const Graph g = make_prism();
    const Graph g2 = or_power(g, 2);
    for (std::size_t l = 0; l < g.vertex_count(); ++l) EXPECT_EQ(subgraph_view(g2, l), g);
}

TEST(DegreeFormulas, CycleAndRegular) {
    EXPECT_EQ(degree_formula_cycle(5, 1), 2u);
    EXPECT_EQ(degree_formula_cycle(5, 2), 12u);
    EXPECT_EQ(degree_formula_regular(3, 6, 2), 21u);
    EXPECT_EQ(degree_formula_regular(2, 5, 3), 62u);
}

TEST(DegreeFormulas, GeneralFormulaGivesTheDiagonalTupleDegree) {
    const Graph p3 = make_path(3);
    const auto deg = degrees(p3);
    const auto formula = degree_formula_general(deg, 3);
    const Graph g3 = or_power(p3, 3);
    TupleIndex idx(3, 3);
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(degree(g3, idx.encode({x, x, x})), formula[x]);
}

TEST(DegreeFormulas, TupleDegreeMatchesBruteForce) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 5, 0.3);
        const Graph g2 = or_power(g, 2);
        const auto ref = oracle::or_power_matrix(g, 2);
        TupleIndex idx(5, 2);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            std::size_t count = 0;
            for (bool b : ref[i]) count += b ? 1 : 0;
            EXPECT_EQ(tuple_degree(degrees(g), idx.decode(i)), count);
            EXPECT_EQ(degree(g2, i), count);
        }
    }
}
