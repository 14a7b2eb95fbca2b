#include "chromacode/codec.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/json_io.hpp"

#include <gtest/gtest.h>

using namespace chromacode;

TEST(Codec, ParityExampleRoundTripsExhaustively) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto plan = build_codec(example1_spec(), example1_pmf(), n);
        const auto rt = round_trip(plan);
        EXPECT_TRUE(rt.lossless()) << "n=" << n;
        std::size_t expected_pairs = 1;
        for (std::size_t i = 0; i < n; ++i) expected_pairs *= 8;
        EXPECT_EQ(rt.pairs_checked, expected_pairs);
    }
}

TEST(Codec, ParityExampleRates) {
    const auto r = simulate(example1_spec(), example1_pmf(), 1, 20000, 99);
    EXPECT_TRUE(r.lossless);
    EXPECT_NEAR(r.first.empirical, 1.0, 0.02);
    EXPECT_NEAR(r.second.empirical, 1.0, 0.02);
    EXPECT_NEAR(r.first.huffman, 1.0, 1e-12);
}

TEST(Codec, SimulationIsSeedDeterministic) {
    const auto plan = build_codec(example1_spec(), example1_pmf(), 2);
    const auto a = dump_json(to_json(simulate(plan, 5000, 1234)));
    const auto b = dump_json(to_json(simulate(plan, 5000, 1234)));
    const auto c = dump_json(to_json(simulate(plan, 5000, 1235)));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Codec, DecodeRejectsUnseenColorPair) {
    const auto plan = build_codec(cycle_spec(5), cycle_pmf(5), 1);
    bool rejected = false;
    for (ColorId c1 = 0; c1 < plan.first.coloring.palette && !rejected; ++c1)
        for (ColorId c2 = 0; c2 < plan.second.coloring.palette && !rejected; ++c2)
            if (!plan.decoder.count(plan.key(c1, c2))) {
                EXPECT_THROW(decode_colors(plan, c1, c2), UnsupportedInput);
                rejected = true;
            }
    EXPECT_TRUE(rejected);
}

TEST(Codec, CycleFamilyIsLossless) {
    const auto plan = build_codec(cycle_spec(5), cycle_pmf(5), 1);
    EXPECT_TRUE(round_trip(plan).lossless());
    EXPECT_EQ(plan.first.coloring.palette, 3u);
}

TEST(Codec, AmbiguousPowerColoringsAreReported) {
    EXPECT_THROW(build_codec(cycle_spec(5), cycle_pmf(5), 2), AmbiguityError);
}

TEST(Codec, EncodeThenDecodeBits) {
    const auto plan = build_codec(example1_spec(), example1_pmf(), 2);
    const auto e1 = encode_block(plan, Source::first, {3, 2});
    const auto e2 = encode_block(plan, Source::second, {1, 0});
    const auto out = decode_bits(plan, e1.bits, e2.bits);
    const auto& spec = plan.spec;
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], spec(3, 1));
    EXPECT_EQ(out[1], spec(2, 0));
}

TEST(Codec, StrategyNames) {
    for (auto s : {ColoringStrategy::exact, ColoringStrategy::greedy, ColoringStrategy::even_cycle,
                   ColoringStrategy::odd_cycle, ColoringStrategy::automatic})
        EXPECT_EQ(coloring_strategy_from_string(to_string(s)), s);
    EXPECT_THROW(coloring_strategy_from_string("nope"), InvalidArgument);
}

TEST(Codec, WrongStrategyIsRejected) {
    EXPECT_THROW(build_codec(cycle_spec(5), cycle_pmf(5), 1, ColoringStrategy::even_cycle), Error);
}
