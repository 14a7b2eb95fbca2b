#pragma once

#include "chromacode/char_graph.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace chromacode {

enum class ColoringStrategy { exact, greedy, even_cycle, odd_cycle, automatic };

std::string to_string(ColoringStrategy s);
// Accepts exact, greedy, even-cycle, odd-cycle and auto.
ColoringStrategy coloring_strategy_from_string(const std::string& s);

// Colors g^n with the given strategy and validates the result.
Coloring color_power(const Graph& g, const Graph& power, std::size_t n, ColoringStrategy strategy,
                     const ExactOptions& exact = {});

struct SourcePlan {
    Graph graph;
    Graph power;
    Coloring coloring;
    std::vector<Rational> block_pmf;  // product of the marginal over a block
    ColoringPMF color_pmf;
    HuffmanCode code;
};

struct DecoderEntry {
    std::vector<int> outcomes;  // f applied coordinate-wise
    std::size_t block1 = 0;     // a block pair that produced the entry
    std::size_t block2 = 0;
};

struct CodecPlan {
    std::size_t n = 1;
    FunctionSpec spec;
    JointPMF pmf;
    ColoringStrategy strategy = ColoringStrategy::automatic;
    SourcePlan first;
    SourcePlan second;
    std::unordered_map<std::uint64_t, DecoderEntry> decoder;  // key: color1 * palette2 + color2

    std::uint64_t key(ColorId c1, ColorId c2) const { return c1 * second.coloring.palette + c2; }
    const SourcePlan& source(Source s) const { return s == Source::first ? first : second; }
};

constexpr std::size_t kDefaultCodecGuard = 1u << 20;

// Throws AmbiguityError naming two block pairs that share colors but not outcomes.
CodecPlan build_codec(const FunctionSpec& spec, const JointPMF& pmf, std::size_t n,
                      ColoringStrategy strategy = ColoringStrategy::automatic,
                      std::size_t power_guard = 10000, std::size_t pair_guard = kDefaultCodecGuard);

struct EncodedBlock {
    ColorId color = 0;
    std::string bits;
};

EncodedBlock encode_block(const CodecPlan& plan, Source source, const std::vector<std::size_t>& block);
// Throws UnsupportedInput for a color pair that no positive-probability input produces.
std::vector<int> decode_colors(const CodecPlan& plan, ColorId c1, ColorId c2);
std::vector<int> decode_bits(const CodecPlan& plan, const std::string& bits1, const std::string& bits2);

struct RoundTripReport {
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;
    bool lossless() const { return failures == 0; }
};

// Every positive-probability block pair through encode and decode.
RoundTripReport round_trip(const CodecPlan& plan, std::size_t pair_guard = kDefaultCodecGuard);

struct SourceRate {
    double empirical = 0;        // bits per source symbol
    double huffman = 0;          // expected codeword length / n
    double coloring_entropy = 0; // H(color) / n
    double source_entropy = 0;   // H(X)
    std::optional<double> chromatic_entropy;     // brute force over the power, per symbol
    std::optional<double> fractional_lower;      // uniform odd cycles
    std::optional<double> window_lo;             // α-profile window, per symbol
    std::optional<double> window_hi;
    std::size_t total_bits = 0;
};

struct RateReport {
    std::size_t n = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    SourceRate first;
    SourceRate second;
    bool lossless = true;
};

// Draws i.i.d. blocks, codes and decodes them. Throws Error at the first mismatch.
RateReport simulate(const CodecPlan& plan, std::size_t samples, std::uint64_t seed);
RateReport simulate(const FunctionSpec& spec, const JointPMF& pmf, std::size_t n, std::size_t samples,
                    std::uint64_t seed, ColoringStrategy strategy = ColoringStrategy::automatic);

}  // namespace chromacode
