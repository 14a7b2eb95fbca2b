#pragma once

#include "chromacode/coloring.hpp"
#include "chromacode/graph.hpp"
#include "chromacode/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace chromacode {

using BigInt = boost::multiprecision::cpp_int;

struct ColoringPMF {
    std::vector<Rational> probs;  // indexed by color id
};

double entropy_bits(const std::vector<Rational>& pmf);
std::vector<Rational> uniform_pmf(std::size_t n);

struct ColoringEntropy {
    double bits = 0;
    ColoringPMF pmf;
};

// Push-forward of vertex_pmf under the coloring. Throws on an invalid coloring.
ColoringEntropy coloring_entropy(const Graph& g, const Coloring& c, const std::vector<Rational>& vertex_pmf);
// Same push-forward without graph or validity checks.
ColoringPMF color_distribution(const Coloring& c, const std::vector<Rational>& vertex_pmf);

struct ChromaticEntropy {
    double bits = 0;
    Coloring witness;
    ColoringPMF pmf;
};

constexpr std::size_t kDefaultBruteForceGuard = 12;

// Exact minimum over all valid colorings: a memoized search that peels off the
// colour class of the lowest remaining vertex.
ChromaticEntropy chromatic_entropy_bruteforce(const Graph& g, const std::vector<Rational>& vertex_pmf,
                                              std::size_t guard = kDefaultBruteForceGuard);

enum class AlphaOrdering {
    monotone,  // alpha_t >= alpha_{t-1}
    scaled,    // alpha_t >= |MIS_G| * alpha_{t-1}
};

struct AlphaProfile {
    std::vector<BigInt> alphas;     // alpha_0 .. alpha_n
    std::vector<BigInt> mis_sizes;  // |MIS_G|^t for t = 0..n
};

// Checks constraint (a), alpha_0 = 1, positivity and the requested ordering.
bool is_feasible_profile(const AlphaProfile& p, const BigInt& vertex_total, AlphaOrdering ordering);
std::vector<Rational> profile_pmf(const AlphaProfile& p, const BigInt& vertex_total);
double profile_entropy(const AlphaProfile& p, const BigInt& vertex_total);

struct EntropyWindow {
    double lo = 0;                // per-symbol entropy at the largest feasible alpha_n
    double hi = 0;                // per-symbol entropy at the smallest feasible alpha_n
    Rational alpha_lower;         // real lower bound on alpha_n
    BigInt alpha_min;             // ceil(alpha_lower)
    BigInt alpha_max;             // floor((V^n - 1) / |MIS|^n)
    AlphaProfile lo_profile;
    AlphaProfile hi_profile;
    bool relaxed_lower = false;   // no completion inside [alpha_min, alpha_max]; searched all alpha_n
    AlphaOrdering ordering = AlphaOrdering::monotone;
};

// Minimum-entropy completion of alpha_n under the ordering, or empty alphas when none exists.
AlphaProfile complete_profile(std::size_t v, std::size_t mis, std::size_t n, const BigInt& alpha_n,
                              AlphaOrdering ordering);

EntropyWindow alpha_entropy_window(std::size_t v, std::size_t mis, std::size_t n,
                                   AlphaOrdering ordering = AlphaOrdering::monotone);
EntropyWindow odd_cycle_entropy_upper_bound(std::size_t k, std::size_t n,
                                            AlphaOrdering ordering = AlphaOrdering::monotone);
EntropyWindow general_entropy_upper_bound(const Graph& g, std::size_t n,
                                          AlphaOrdering ordering = AlphaOrdering::monotone,
                                          std::size_t mis_guard = kDefaultMisGuard);

// log2((2k+1)/k) for V = 2k+1; rejects even V and non-uniform sources.
double fractional_entropy_lower_bound(std::size_t v, const std::vector<Rational>* source_pmf = nullptr);

struct HuffmanCode {
    std::map<ColorId, std::string> codewords;  // '0'/'1' strings
    Rational average_length;
    double entropy = 0;
    std::vector<std::string> warnings;
};

HuffmanCode huffman_code(const ColoringPMF& pmf);

// Splits a concatenation of codewords back into symbols; throws on a dangling tail.
std::vector<ColorId> decode_prefix_stream(const HuffmanCode& code, const std::string& bits);

}  // namespace chromacode
