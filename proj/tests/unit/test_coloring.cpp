#include "chromacode/coloring.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromacode;

TEST(Coloring, MakeColoringRenumbers) {
    const auto c = make_coloring({7, 3, 7, 9});
    EXPECT_EQ(c.palette, 3u);
    EXPECT_EQ(c.colors, (std::vector<ColorId>{1, 0, 1, 2}));
}

TEST(Coloring, ValidityCheck) {
    const Graph c4 = make_cycle(4);
    EXPECT_TRUE(is_valid_coloring(c4, make_coloring({0, 1, 0, 1})));
    EXPECT_FALSE(is_valid_coloring(c4, make_coloring({0, 0, 1, 1})));
}

TEST(ExactColoring, MatchesBacktrackingOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 4 + trial % 6, 0.35);
        const auto r = exact_chromatic_number(g);
        EXPECT_EQ(r.chi, oracle::chromatic_number(g));
        EXPECT_TRUE(is_valid_coloring(g, r.witness));
        EXPECT_EQ(r.witness.palette, r.chi);
    }
}

TEST(ExactColoring, OddCyclePowers) {
    EXPECT_EQ(exact_chromatic_number(make_cycle(5)).chi, 3u);
    EXPECT_EQ(exact_chromatic_number(or_power(make_cycle(5), 2)).chi, 8u);
}

TEST(ExactColoring, GuardTrips) {
    ExactOptions o;
    o.guard = 10;
    EXPECT_THROW(exact_chromatic_number(make_cycle(11), o), GuardExceeded);
}

TEST(MaxClique, SmallCases) {
    EXPECT_EQ(max_clique_size(make_cycle(5)), 2u);
    EXPECT_EQ(max_clique_size(make_complete(6)), 6u);
    EXPECT_EQ(max_clique_size(make_prism()), 3u);
    EXPECT_EQ(max_clique_size(or_power(make_cycle(5), 2)), 4u);
}

TEST(PowerColoring, EvenCycleUsesTwoToTheN) {
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        const auto pc = even_cycle_power_coloring(k, n);
        ASSERT_TRUE(pc.coloring.has_value());
        EXPECT_EQ(pc.coloring->palette, std::size_t{1} << n);
        EXPECT_TRUE(is_valid_coloring(pc.power, *pc.coloring));
    }
}

TEST(PowerColoring, BipartiteBaseGraphs) {
    const Graph p3 = make_path(3);
    const auto c = bipartite_power_coloring(p3, 3);
    EXPECT_EQ(c.palette, 8u);
    EXPECT_TRUE(is_valid_coloring(or_power(p3, 3), c));
}

TEST(PowerColoring, OddCycleRecursion) {
    const std::vector<std::size_t> want{3, 8, 20, 50, 125, 313};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(odd_cycle_recursive_count(n), want[n - 1]);
}

TEST(PowerColoring, OddCycleSchemeIsValidAndTight) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto pc = odd_cycle_power_coloring(5, n);
        ASSERT_TRUE(pc.coloring.has_value());
        EXPECT_EQ(pc.coloring->palette, odd_cycle_recursive_count(n));
        EXPECT_TRUE(is_valid_coloring(pc.power, *pc.coloring));
    }
    const auto c7 = odd_cycle_power_coloring(7, 2);
    ASSERT_TRUE(c7.coloring.has_value());
    EXPECT_TRUE(is_valid_coloring(c7.power, *c7.coloring));
    EXPECT_EQ(c7.coloring->palette, 8u);
    EXPECT_LE(power_chromatic_numbers(make_cycle(7), 2)[1], 8u);
}

TEST(PowerColoring, GreedyGainGrows) {
    double previous = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const double eta = to_double(greedy_gain(5, n).eta);
        EXPECT_GT(eta, previous);
        previous = eta;
    }
}

TEST(RegularPowers, ClosedFormAgainstSolver) {
    const Graph prism = make_prism();
    const auto r = regular_power_chromatic(3, 6, 2, &prism);
    EXPECT_EQ(r.closed_form, 9u);
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(*r.exact, oracle::chromatic_number(oracle::or_power_matrix(prism, 2)));
    EXPECT_TRUE(*r.agrees);

    const Graph k33 = make_custom(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    const auto b = regular_power_chromatic(3, 6, 2, &k33);
    EXPECT_EQ(*b.exact, 4u);
    EXPECT_FALSE(*b.agrees);
    EXPECT_THROW(regular_power_chromatic(2, 5, 2), UnsupportedInput);
}

TEST(FoldColoring, MatchesSubsetOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 5 + trial % 3, 0.3);
        for (std::size_t b = 1; b <= 2; ++b) {
            const std::size_t a = b_fold_chromatic_number(g, b);
            EXPECT_TRUE(oracle::fold_colorable(g, a, b));
            EXPECT_FALSE(oracle::fold_colorable(g, a - 1, b));
            const auto fc = find_b_fold_coloring(g, a, b);
            ASSERT_TRUE(fc.has_value());
            EXPECT_TRUE(is_valid_fractional_coloring(g, *fc));
        }
    }
}

TEST(FoldColoring, FiveCycle) {
    const Graph c5 = make_cycle(5);
    EXPECT_EQ(b_fold_chromatic_number(c5, 1), 3u);
    EXPECT_EQ(b_fold_chromatic_number(c5, 2), 5u);
    EXPECT_EQ(b_fold_chromatic_number(c5, 3), 8u);
    EXPECT_EQ(b_fold_chromatic_number(c5, 4), 10u);
}

TEST(FoldColoring, ConsecutiveWindowConstruction) {
    for (std::size_t b = 1; b <= 4; ++b) {
        const auto r = fractional_chromatic_cycle(2, b);
        EXPECT_EQ(r.claimed, 2 * b + 1);
        EXPECT_TRUE(is_valid_fractional_coloring(make_cycle(5), r.windows));
        EXPECT_EQ(r.windows_colors, b_fold_chromatic_number(make_cycle(5), b));
    }
    EXPECT_EQ(fractional_chromatic_cycle(2, 1).chi_f, Rational(5, 2));
}

TEST(PowerChromatic, LexicographicSubstitutionMatchesDirectSolver) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 4 + trial % 4, 0.3);
        const auto chis = power_chromatic_numbers(g, 2);
        EXPECT_EQ(chis[0], oracle::chromatic_number(g));
        ExactOptions o;
        o.guard = 64;
        EXPECT_EQ(chis[1], exact_chromatic_number(or_power(g, 2), o).chi);
    }
    EXPECT_EQ(power_chromatic_numbers(make_cycle(5), 3), (std::vector<std::size_t>{3, 8, 20}));
}
