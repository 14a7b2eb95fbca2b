#pragma once

#include "chromacode/graph.hpp"
#include "chromacode/rational.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace chromacode {

using ColorId = std::size_t;

struct Coloring {
    std::vector<ColorId> colors;
    std::size_t palette = 0;
};

// Renumbers the used colors to 0..k-1 preserving their relative order.
Coloring make_coloring(std::vector<ColorId> raw);

bool is_valid_coloring(const Graph& g, const Coloring& c);

struct ExactOptions {
    std::size_t guard = 64;
    std::chrono::milliseconds timeout{60000};
};

struct ExactColoringResult {
    std::size_t chi = 0;
    Coloring witness;
    std::size_t clique_lower_bound = 0;
    std::size_t nodes = 0;
};

std::size_t max_clique_size(const Graph& g);

// DSATUR branch and bound seeded with a greedy clique. Throws GuardExceeded /
// TimeoutExceeded when it cannot finish.
ExactColoringResult exact_chromatic_number(const Graph& g, const ExactOptions& options = {});

Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order);
Coloring greedy_coloring(const Graph& g);

struct PowerColoring {
    Graph power;                      // empty when not materialized
    std::optional<Coloring> coloring;
    std::size_t count = 0;            // closed-form or recursive color count
    bool materialized = false;
};

constexpr std::size_t kDefaultPowerGuard = 10000;

// Parity-vector coloring of C_{2k}^n; exactly 2^n colors.
PowerColoring even_cycle_power_coloring(std::size_t k, std::size_t n,
                                        std::size_t guard = kDefaultPowerGuard);

// Coordinate-wise side vector for any bipartite base graph.
Coloring bipartite_power_coloring(const Graph& base, std::size_t n);

// χ(C^{n+1}) = 2χ(C^n) + ceil(χ(C^n)/2), χ(C^1) = 3.
std::size_t odd_cycle_recursive_count(std::size_t n);

// Shifted color windows per sub-graph block; the coloring is verified before it is returned.
PowerColoring odd_cycle_power_coloring(std::size_t cycle_length, std::size_t n,
                                       std::size_t guard = kDefaultPowerGuard);

// Raw window start offsets used for the blocks of C_{2k+1}^n, and the window size.
struct BlockWindows {
    std::size_t palette = 0;
    std::size_t window = 0;
    std::vector<std::size_t> offsets;
};
BlockWindows odd_cycle_block_windows(std::size_t cycle_length, std::size_t n);

// Scheme coloring of C_{2k+1}^n as a function of the tuple, without materializing the graph.
std::vector<ColorId> odd_cycle_scheme_colors(std::size_t cycle_length, std::size_t n);

struct GreedyGain {
    Rational eta;            // 3^n / χ(C^n)
    double reference_curve = 0;  // 1.2^n
    double ratio_curve = 0;  // 1.2^{n-1}
};
GreedyGain greedy_gain(std::size_t cycle_length, std::size_t n);

struct RegularPowerChromatic {
    std::size_t closed_form = 0;          // d^n
    std::optional<std::size_t> exact;     // solver value on a supplied graph
    std::optional<bool> agrees;
};
RegularPowerChromatic regular_power_chromatic(std::size_t d, std::size_t v, std::size_t n,
                                              const Graph* concrete = nullptr,
                                              const ExactOptions& options = {});

struct FractionalColoring {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::vector<ColorId>> sets;
};

bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& fc);

constexpr std::size_t kMaxFoldColors = 128;

// An a:b coloring of g if one exists, by exhaustive search (small graphs, a <= 128).
std::optional<FractionalColoring> find_b_fold_coloring(const Graph& g, std::size_t a, std::size_t b,
                                                       std::chrono::milliseconds timeout = std::chrono::milliseconds(60000));
// Smallest a admitting an a:b coloring.
std::size_t b_fold_chromatic_number(const Graph& g, std::size_t b, std::size_t guard = 12,
                                    std::chrono::milliseconds timeout = std::chrono::milliseconds(60000));

// χ(g^t) for t = 1..n through χ(g^t) = χ_b(g) with b = χ(g^{t-1}); g^t is never built.
std::vector<std::size_t> power_chromatic_numbers(const Graph& g, std::size_t n, const ExactOptions& options = {});

struct FractionalCycleReport {
    std::size_t claimed = 0;         // 2b + 1
    std::size_t windows_colors = 0;  // colors used by the consecutive-window construction
    FractionalColoring windows;      // a:b assignment with consecutive color windows
    Rational chi_f;                  // (2k+1)/k
};

FractionalCycleReport fractional_chromatic_cycle(std::size_t k, std::size_t b);
Rational fractional_chromatic_cycle_power(std::size_t k, std::size_t n);

}  // namespace chromacode
