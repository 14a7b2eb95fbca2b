#include "chromacode/or_product.hpp"

#include "chromacode/errors.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace chromacode {

std::size_t checked_power(std::size_t base, std::size_t n, std::size_t limit) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (base != 0 && out > limit / base) {
            throw GuardExceeded("power " + std::to_string(base) + "^" + std::to_string(n) +
                                    " exceeds the vertex budget " + std::to_string(limit),
                                "size");
        }
        out *= base;
    }
    if (out > limit) {
        throw GuardExceeded("power " + std::to_string(base) + "^" + std::to_string(n) +
                                " exceeds the vertex budget " + std::to_string(limit),
                            "size");
    }
    return out;
}

TupleIndex::TupleIndex(std::size_t base, std::size_t length) : base_(base), length_(length) {
    if (base == 0 || length == 0) throw InvalidArgument("tuple index needs base >= 1 and length >= 1");
    size_ = checked_power(base, length, std::numeric_limits<std::size_t>::max());
}

std::size_t TupleIndex::encode(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != length_) throw InvalidArgument("tuple has wrong length");
    std::size_t idx = 0;
    for (auto t : tuple) {
        if (t >= base_) throw InvalidArgument("tuple coordinate out of range");
        idx = idx * base_ + t;
    }
    return idx;
}

std::vector<std::size_t> TupleIndex::decode(std::size_t index) const {
    if (index >= size_) throw InvalidArgument("tuple index out of range");
    std::vector<std::size_t> t(length_);
    for (std::size_t k = length_; k-- > 0;) {
        t[k] = index % base_;
        index /= base_;
    }
    return t;
}

Graph or_power(const Graph& g, std::size_t n, std::size_t guard) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    const std::size_t v = g.vertex_count();
    const std::size_t total = checked_power(v, n, guard);
    if (n == 1) return g.with_tuple_shape(TupleShape{v, 1});

    std::vector<VertexSet> rows(total, VertexSet(total));
    TupleIndex index(v, n);
    for (std::size_t u = 0; u < total; ++u) {
        auto tuple = index.decode(u);
        std::size_t prefix = 0;
        std::size_t span = total;
        for (std::size_t k = 0; k < n; ++k) {
            span /= v;
            const auto& nb = g.neighbors(tuple[k]);
            for (auto y = nb.find_first(); y != VertexSet::npos; y = nb.find_next(y)) {
                rows[u].set((prefix * v + y) * span, span, true);
            }
            prefix = prefix * v + tuple[k];
        }
    }
    return Graph(total, std::move(rows), TupleShape{v, n});
}

std::size_t tuple_degree(const std::vector<std::size_t>& base_degrees, const std::vector<std::size_t>& tuple) {
    const std::size_t v = base_degrees.size();
    std::size_t scale = 1;
    std::size_t deg = 0;
    for (std::size_t k = tuple.size(); k-- > 0;) {
        deg += base_degrees.at(tuple[k]) * scale;
        scale *= v;
    }
    return deg;
}

std::size_t degree_formula_regular(std::size_t d, std::size_t v, std::size_t n) {
    if (n == 0 || v < 2) throw InvalidArgument("degree formula needs n >= 1 and V >= 2");
    if (d >= v) throw InvalidArgument("d-regular graph needs V >= d + 1");
    // d (V^n - 1) / (V - 1) = d (1 + V + ... + V^{n-1})
    std::size_t geometric = 0;
    std::size_t p = 1;
    for (std::size_t j = 0; j < n; ++j) {
        geometric += p;
        p *= v;
    }
    return d * geometric;
}

std::size_t degree_formula_cycle(std::size_t v, std::size_t n) {
    if (v < 3) throw InvalidArgument("cycle needs V >= 3");
    return degree_formula_regular(2, v, n);
}

std::vector<std::size_t> degree_formula_general(const std::vector<std::size_t>& base_degrees, std::size_t n) {
    if (n == 0) throw InvalidArgument("degree formula needs n >= 1");
    const std::size_t v = base_degrees.size();
    std::vector<std::size_t> out;
    out.reserve(v);
    for (auto d : base_degrees) {
        std::size_t deg = d;
        std::size_t p = 1;
        for (std::size_t j = 1; j < n; ++j) {
            p *= v;
            deg += d * p;
        }
        out.push_back(deg);
    }
    return out;
}

std::vector<std::size_t> degree_formula(DegreeFamily family, const DegreeParams& params, std::size_t n) {
    switch (family) {
        case DegreeFamily::cycle: return {degree_formula_cycle(params.v, n)};
        case DegreeFamily::regular: return {degree_formula_regular(params.d, params.v, n)};
        case DegreeFamily::general:
            if (params.base_degrees.empty()) throw InvalidArgument("general family needs base degrees");
            return degree_formula_general(params.base_degrees, n);
    }
    throw InvalidArgument("unknown degree family");
}

Graph subgraph_view(const Graph& gn, std::size_t l) {
    const auto& shape = gn.tuple_shape();
    if (!shape) throw InvalidArgument("graph has no recorded power shape");
    if (l >= shape->base) throw InvalidArgument("block index " + std::to_string(l) + " out of range");
    const std::size_t block = gn.vertex_count() / shape->base;
    std::vector<VertexId> vertices(block);
    std::iota(vertices.begin(), vertices.end(), l * block);
    Graph sub = induced_subgraph(gn, vertices);
    if (shape->length > 1) return sub.with_tuple_shape(TupleShape{shape->base, shape->length - 1});
    return sub;
}

}  // namespace chromacode
