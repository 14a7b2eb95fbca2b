#pragma once

#include "chromacode/graph.hpp"

#include <cstddef>
#include <vector>

namespace chromacode {

// Big-endian positional encoding of [base]^length.
class TupleIndex {
public:
    TupleIndex(std::size_t base, std::size_t length);

    std::size_t base() const { return base_; }
    std::size_t length() const { return length_; }
    std::size_t size() const { return size_; }
    // Size of one sub-graph block, base^(length-1).
    std::size_t block_size() const { return size_ / base_; }

    std::size_t encode(const std::vector<std::size_t>& tuple) const;
    std::vector<std::size_t> decode(std::size_t index) const;

private:
    std::size_t base_;
    std::size_t length_;
    std::size_t size_;
};

// base^n, or throws GuardExceeded when it exceeds `limit`.
std::size_t checked_power(std::size_t base, std::size_t n, std::size_t limit);

constexpr std::size_t kDefaultOrPowerGuard = 10000;

// n-fold power on tuples: distinct tuples are adjacent iff the first coordinate in
// which they differ holds an edge of g. Sub-graph l is the block of tuples with first
// coordinate l, a copy of the (n-1)-fold power, and two blocks are either completely
// joined (l ~ l' in g) or not joined at all.
Graph or_power(const Graph& g, std::size_t n, std::size_t guard = kDefaultOrPowerGuard);

// Degree of the tuple x in G^n: sum_k deg(x_k) * V^(n-k).
std::size_t tuple_degree(const std::vector<std::size_t>& base_degrees, const std::vector<std::size_t>& tuple);

std::size_t degree_formula_cycle(std::size_t v, std::size_t n);
std::size_t degree_formula_regular(std::size_t d, std::size_t v, std::size_t n);
// deg(x) + sum_{j=1}^{n-1} deg(x) V^j for each base vertex x: the degree of (x, ..., x).
std::vector<std::size_t> degree_formula_general(const std::vector<std::size_t>& base_degrees, std::size_t n);

enum class DegreeFamily { cycle, regular, general };

struct DegreeParams {
    std::size_t v = 0;
    std::size_t d = 0;
    std::vector<std::size_t> base_degrees;
};

std::vector<std::size_t> degree_formula(DegreeFamily family, const DegreeParams& params, std::size_t n);

// Induced graph on block l of a recorded power; vertex j of the result is tuple (l, tail j).
Graph subgraph_view(const Graph& gn, std::size_t l);

}  // namespace chromacode
