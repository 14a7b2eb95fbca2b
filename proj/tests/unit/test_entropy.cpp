#include "chromacode/entropy.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace chromacode;

namespace {

std::vector<double> doubles(const std::vector<Rational>& p) {
    std::vector<double> out;
    for (const auto& r : p) out.push_back(to_double(r));
    return out;
}

}  // namespace

TEST(Entropy, UniformAndDegenerate) {
    EXPECT_NEAR(entropy_bits(uniform_pmf(8)), 3.0, 1e-12);
    EXPECT_NEAR(entropy_bits({Rational(1), Rational(0)}), 0.0, 1e-12);
}

TEST(Entropy, ColoringPushForward) {
    const Graph c4 = make_cycle(4);
    const auto e = coloring_entropy(c4, make_coloring({0, 1, 0, 1}), uniform_pmf(4));
    EXPECT_NEAR(e.bits, 1.0, 1e-12);
    EXPECT_THROW(coloring_entropy(c4, make_coloring({0, 0, 1, 1}), uniform_pmf(4)), InvalidArgument);
}

TEST(ChromaticEntropy, MatchesExhaustiveColorings) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 4 + trial % 4, 0.3);
        std::vector<Rational> pmf;
        long long total = 0;
        std::vector<long long> w;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            w.push_back(1 + static_cast<long long>(rng() % 5));
            total += w.back();
        }
        for (auto x : w) pmf.emplace_back(x, total);
        const auto h = chromatic_entropy_bruteforce(g, pmf);
        EXPECT_NEAR(h.bits, oracle::min_coloring_entropy(g, doubles(pmf)), 1e-9);
        EXPECT_TRUE(is_valid_coloring(g, h.witness));
    }
}

TEST(ChromaticEntropy, FiveCycleUniform) {
    const auto h = chromatic_entropy_bruteforce(make_cycle(5), uniform_pmf(5));
    EXPECT_NEAR(h.bits, std::log2(5.0) - 0.8, 1e-12);
    EXPECT_NEAR(h.bits, 1.5219, 5e-3);
}

TEST(ChromaticEntropy, GuardTrips) {
    EXPECT_THROW(chromatic_entropy_bruteforce(make_cycle(20), uniform_pmf(20), 12), GuardExceeded);
}

TEST(AlphaWindow, FiveCycleCube) {
    const auto w = odd_cycle_entropy_upper_bound(2, 3);
    EXPECT_EQ(w.alpha_lower, Rational(200, 17));
    EXPECT_EQ(w.alpha_min, 12);
    EXPECT_EQ(w.alpha_max, 15);
    EXPECT_EQ(w.lo_profile.alphas.front(), 1);
    EXPECT_LE(w.lo, w.hi);
    EXPECT_TRUE(is_feasible_profile(w.lo_profile, 125, AlphaOrdering::monotone));
    EXPECT_TRUE(is_feasible_profile(w.hi_profile, 125, AlphaOrdering::monotone));
    EXPECT_NEAR(w.lo, profile_entropy(w.lo_profile, 125) / 3.0, 1e-12);
}

TEST(AlphaWindow, ProfilePmfSumsToOne) {
    AlphaProfile p;
    p.alphas = {1, 2, 4, 13};
    p.mis_sizes = {1, 2, 4, 8};
    EXPECT_TRUE(is_feasible_profile(p, 125, AlphaOrdering::monotone));
    EXPECT_EQ(sum(profile_pmf(p, 125)), Rational(1));
}

TEST(AlphaWindow, GeneralGraphAgreesWithCycleEntryPoint) {
    const auto a = general_entropy_upper_bound(make_cycle(5), 2);
    const auto b = odd_cycle_entropy_upper_bound(2, 2);
    EXPECT_NEAR(a.lo, b.lo, 1e-12);
    EXPECT_NEAR(a.hi, b.hi, 1e-12);
}

TEST(FractionalBound, FiveCycle) {
    EXPECT_NEAR(fractional_entropy_lower_bound(5), std::log2(2.5), 1e-12);
    EXPECT_THROW(fractional_entropy_lower_bound(6), InvalidArgument);
    for (std::size_t k = 2; k <= 4; ++k) {
        const std::size_t v = 2 * k + 1;
        EXPECT_LE(fractional_entropy_lower_bound(v), chromatic_entropy_bruteforce(make_cycle(v), uniform_pmf(v)).bits);
    }
}

TEST(Huffman, AverageMatchesMergeOracle) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 9;
        std::vector<Rational> p;
        long long total = 0;
        std::vector<long long> w;
        for (std::size_t i = 0; i < n; ++i) {
            w.push_back(1 + static_cast<long long>(rng() % 20));
            total += w.back();
        }
        for (auto x : w) p.emplace_back(x, total);
        const auto code = huffman_code(ColoringPMF{p});
        EXPECT_NEAR(to_double(code.average_length), oracle::huffman_average(doubles(p)), 1e-12);
        EXPECT_GE(to_double(code.average_length) + 1e-12, code.entropy);
        EXPECT_LT(to_double(code.average_length), code.entropy + 1.0);
        for (const auto& [a, wa] : code.codewords)
            for (const auto& [b, wb] : code.codewords)
                if (a != b) EXPECT_NE(wb.rfind(wa, 0), 0u) << wa << " prefixes " << wb;
    }
}

TEST(Huffman, StreamRoundTrip) {
    const auto code = huffman_code(ColoringPMF{{Rational(1, 5), Rational(2, 5), Rational(2, 5)}});
    EXPECT_EQ(code.average_length, Rational(8, 5));
    std::string bits;
    const std::vector<ColorId> msg{0, 2, 1, 1, 0};
    for (auto c : msg) bits += code.codewords.at(c);
    EXPECT_EQ(decode_prefix_stream(code, bits), msg);
    std::string longest;
    for (const auto& [c, w] : code.codewords)
        if (w.size() > longest.size()) longest = w;
    EXPECT_THROW(decode_prefix_stream(code, bits + longest.substr(0, 1)), Error);
}
