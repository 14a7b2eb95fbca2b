#pragma once

#include "chromacode/graph.hpp"
#include "chromacode/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chromacode {

// Vertices outside y adjacent to some member of y.
VertexSet open_neighborhood(const Graph& g, const VertexSet& y);
// Vertices adjacent to some member of y, members of y included.
VertexSet adjacent_set(const Graph& g, const VertexSet& y);

// |N(Y)| / |Y| with N(Y) the open neighbourhood. Throws on an empty y.
Rational expansion_rate(const Graph& g, const VertexSet& y);
// |adjacent_set(Y)| / |Y|, the quantity the spectral lower bounds control.
Rational adjacency_rate(const Graph& g, const VertexSet& y);

// d^2 / (L^2 + (d^2 - L^2) * y / total); 0 when d = 0.
double tanner_rate_bound(double degree, double lambda, double subset_size, double total);
// (T-1)^2 / (1 + ((T-1)^2 - 1) * y / T) with T = total.
double complete_rate_bound(double total, double subset_size);

// max(lambda_2, |lambda_min|) of a spectrum sorted descending.
double big_lambda(const std::vector<double>& descending);

enum class ExpansionFamily { regular, complete, cycle, general };

std::string to_string(ExpansionFamily f);
ExpansionFamily expansion_family_from_string(const std::string& s);

struct ExpansionBoundsInput {
    ExpansionFamily family = ExpansionFamily::general;
    std::size_t v = 0;
    std::size_t d = 0;             // regular family only
    std::size_t n = 1;
    std::size_t subset_size = 1;
    std::optional<double> lambda;  // regular family: Λ of the power
    std::size_t spectrum_guard = 1u << 20;
};

struct ExpansionBounds {
    std::optional<double> tanner_lower;
    double complete_upper = 0;
    std::optional<double> cycle_lower;
    double degree = 0;             // degree of the power the lower bound refers to
    double lambda = 0;             // Λ used by the lower bound
    bool bound_on_bound = false;   // Λ replaced by the Hong magnitude
    std::optional<bool> cycle_ordering_holds;  // |λ_min| >= λ_2 on the cycle power
};

// Throws InvalidArgument for the regular family without Λ.
ExpansionBounds expansion_bounds(const ExpansionBoundsInput& in);

struct ExpansionReport {
    std::size_t subset_size = 0;
    std::size_t neighborhood_size = 0;
    Rational rate;
    std::size_t adjacent_size = 0;
    Rational adjacency_rate;
    ExpansionBounds bounds;
    ExpansionFamily family = ExpansionFamily::general;
    bool regular = false;
    std::optional<bool> spanning_cycle;  // when known, gates the cycle lower bound
};

// Measures y in g^n and evaluates every family that applies to g.
ExpansionReport expansion_report(const Graph& g, std::size_t n, const VertexSet& y,
                                 std::size_t guard = 10000);

// Held-Karp over subsets; throws GuardExceeded above 20 vertices.
bool has_spanning_cycle(const Graph& g);

// Uniformly random subset of the given size, reproducible from the seed.
VertexSet sample_subset(std::size_t total, std::size_t size, std::uint64_t seed);

struct LambdaRelation {
    double lhs = 0;      // λ_1 of block l
    double rhs = 0;      // λ_2 + (deg - λ_2) / V
    double lambda2 = 0;
    double degree = 0;
    bool holds = false;
};

LambdaRelation induced_lambda_relation_check(const Graph& g, std::size_t n, std::size_t l,
                                             std::size_t guard = 10000);

}  // namespace chromacode
