#include "chromacode/errors.hpp"
#include "chromacode/expansion.hpp"
#include "chromacode/or_product.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromacode;

TEST(ExpansionRate, HandCases) {
    const Graph c5 = make_cycle(5);
    EXPECT_EQ(expansion_rate(c5, make_vertex_set(5, {0})), Rational(2));
    EXPECT_EQ(expansion_rate(make_complete(5), make_vertex_set(5, {0})), Rational(4));
    EXPECT_EQ(expansion_rate(c5, make_vertex_set(5, {0, 1})), Rational(1));
    EXPECT_EQ(adjacency_rate(c5, make_vertex_set(5, {0, 1})), Rational(2));
    EXPECT_THROW(expansion_rate(c5, VertexSet(5)), InvalidArgument);
}

TEST(ExpansionRate, NeighbourhoodExcludesTheSubset) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 5 + trial % 5, 0.3);
        const auto y = sample_subset(g.vertex_count(), 1 + trial % 3, static_cast<std::uint64_t>(trial));
        const auto n = open_neighborhood(g, y);
        EXPECT_FALSE(n.intersects(y));
        EXPECT_EQ(n.count(), oracle::outside_neighbours(g, members(y)));
        EXPECT_EQ(expansion_rate(g, y), Rational(static_cast<long long>(n.count()), static_cast<long long>(y.count())));
    }
}

TEST(ExpansionBounds, CompleteGraphIsTight) {
    EXPECT_NEAR(complete_rate_bound(5, 1), 4.0, 1e-12);
    ExpansionBoundsInput in;
    in.family = ExpansionFamily::complete;
    in.v = 5;
    in.subset_size = 1;
    EXPECT_NEAR(expansion_bounds(in).complete_upper, 4.0, 1e-12);
}

TEST(ExpansionBounds, FiveCycleTanner) {
    EXPECT_NEAR(tanner_rate_bound(2, (1 + std::sqrt(5.0)) / 2, 1, 5), 1.382, 1e-3);
    ExpansionBoundsInput in;
    in.family = ExpansionFamily::regular;
    in.v = 5;
    in.d = 2;
    EXPECT_THROW(expansion_bounds(in), InvalidArgument);
}

TEST(ExpansionBounds, FiveCycleSquareCycleLower) {
    const auto r = expansion_report(make_cycle(5), 2, make_vertex_set(25, {0}));
    ASSERT_TRUE(r.bounds.cycle_lower.has_value());
    EXPECT_NEAR(*r.bounds.cycle_lower, 3.48, 1e-2);
    EXPECT_EQ(r.rate, Rational(12));
    EXPECT_LE(r.rate.convert_to<double>(), r.bounds.complete_upper);
}

TEST(ExpansionBounds, ChainOnRandomSubsets) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 4 + trial % 4, 0.35);
        const std::size_t total = g.vertex_count() * g.vertex_count();
        for (std::size_t size : {std::size_t{1}, total / 4, total / 2}) {
            const auto y = sample_subset(total, std::max<std::size_t>(size, 1), 1000 + trial);
            const auto r = expansion_report(g, 2, y);
            const double inclusive = to_double(r.adjacency_rate);
            if (r.bounds.tanner_lower) EXPECT_LE(*r.bounds.tanner_lower, inclusive + 1e-9);
            if (r.bounds.cycle_lower) EXPECT_LE(*r.bounds.cycle_lower, inclusive + 1e-9);
            EXPECT_LE(to_double(r.rate), r.bounds.complete_upper + 1e-9);
        }
    }
}

TEST(ExpansionBounds, TannerMonotoneInSubsetSize) {
    double previous = 1e300;
    for (std::size_t y = 1; y < 5; ++y) {
        const double b = tanner_rate_bound(2, 1.618, static_cast<double>(y), 5);
        EXPECT_LE(b, previous);
        previous = b;
    }
}

TEST(ExpansionBounds, BigLambdaOfComplete) {
    EXPECT_DOUBLE_EQ(big_lambda({4, -1, -1, -1, -1}), 1.0);
}

TEST(SpanningCycle, HeldKarp) {
    EXPECT_TRUE(has_spanning_cycle(make_cycle(7)));
    EXPECT_TRUE(has_spanning_cycle(make_prism()));
    EXPECT_FALSE(has_spanning_cycle(make_path(5)));
    EXPECT_THROW(has_spanning_cycle(make_cycle(21)), GuardExceeded);
}

TEST(SampleSubset, DeterministicAndSized) {
    const auto a = sample_subset(100, 17, 5);
    EXPECT_EQ(a.count(), 17u);
    EXPECT_EQ(a, sample_subset(100, 17, 5));
    EXPECT_NE(a, sample_subset(100, 17, 6));
}

TEST(LambdaRelation, CyclePowers) {
    const auto a = induced_lambda_relation_check(make_cycle(5), 2, 0);
    EXPECT_NEAR(a.lhs, 2.0, 1e-9);
    EXPECT_NEAR(a.lambda2, 5.09016, 1e-4);
    EXPECT_TRUE(a.holds);
    EXPECT_TRUE(induced_lambda_relation_check(make_cycle(4), 2, 0).holds);
}

TEST(ExpansionBounds, CycleLowerNeedsASpanningCycle) {
    const auto path = expansion_report(make_path(3), 2, make_vertex_set(9, {0, 4, 8}));
    EXPECT_FALSE(path.bounds.cycle_lower.has_value());
    EXPECT_FALSE(*path.spanning_cycle);
    const auto prism = expansion_report(make_prism(), 2, make_vertex_set(36, {0}));
    EXPECT_TRUE(prism.bounds.cycle_lower.has_value());
    EXPECT_LE(*prism.bounds.cycle_lower, to_double(prism.adjacency_rate));
}
