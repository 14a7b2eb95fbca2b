#include "chromacode/expansion.hpp"

#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"
#include "chromacode/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace chromacode {

namespace {

void check_subset(const Graph& g, const VertexSet& y) {
    if (y.size() != g.vertex_count()) throw InvalidArgument("subset universe differs from the vertex count");
    if (y.none()) throw InvalidArgument("expansion rate needs a nonempty subset");
}

Spectrum cycle_spectrum(std::size_t v) {
    Spectrum s;
    for (std::size_t j = 0; j < v; ++j)
        s.eigenvalues.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(v)));
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

double power_degree(double d, std::size_t v, std::size_t n) {
    double s = 0, p = 1;
    for (std::size_t j = 0; j < n; ++j, p *= static_cast<double>(v)) s += p;
    return d * s;
}

}  // namespace

VertexSet open_neighborhood(const Graph& g, const VertexSet& y) {
    VertexSet out = adjacent_set(g, y);
    out -= y;
    return out;
}

VertexSet adjacent_set(const Graph& g, const VertexSet& y) {
    check_subset(g, y);
    VertexSet out(g.vertex_count());
    for (auto v = y.find_first(); v != VertexSet::npos; v = y.find_next(v)) out |= g.neighbors(v);
    return out;
}

Rational expansion_rate(const Graph& g, const VertexSet& y) {
    return Rational(open_neighborhood(g, y).count(), y.count());
}

Rational adjacency_rate(const Graph& g, const VertexSet& y) {
    return Rational(adjacent_set(g, y).count(), y.count());
}

double tanner_rate_bound(double degree, double lambda, double subset_size, double total) {
    if (degree <= 0) return 0.0;
    const double d2 = degree * degree, l2 = lambda * lambda;
    return d2 / (l2 + (d2 - l2) * subset_size / total);
}

double complete_rate_bound(double total, double subset_size) {
    const double t2 = (total - 1.0) * (total - 1.0);
    return t2 / (1.0 + (t2 - 1.0) * subset_size / total);
}

double big_lambda(const std::vector<double>& descending) {
    if (descending.size() < 2) return 0.0;
    return std::max(descending[1], std::abs(descending.back()));
}

std::string to_string(ExpansionFamily f) {
    switch (f) {
        case ExpansionFamily::regular: return "regular";
        case ExpansionFamily::complete: return "complete";
        case ExpansionFamily::cycle: return "cycle";
        case ExpansionFamily::general: return "general";
    }
    return "unknown";
}

ExpansionFamily expansion_family_from_string(const std::string& s) {
    for (auto f : {ExpansionFamily::regular, ExpansionFamily::complete, ExpansionFamily::cycle,
                   ExpansionFamily::general}) {
        if (to_string(f) == s) return f;
    }
    throw InvalidArgument("unknown expansion family '" + s + "'");
}

ExpansionBounds expansion_bounds(const ExpansionBoundsInput& in) {
    if (in.v < 2) throw InvalidArgument("expansion bounds need V >= 2");
    if (in.n == 0) throw InvalidArgument("power must be at least 1");
    const double total = std::pow(static_cast<double>(in.v), static_cast<double>(in.n));
    const double y = static_cast<double>(in.subset_size);
    if (in.subset_size == 0 || y > total) throw InvalidArgument("subset size must lie in [1, V^n]");

    ExpansionBounds b;
    b.complete_upper = complete_rate_bound(total, y);

    auto cycle_bound = [&]() {
        if (in.v < 3) throw InvalidArgument("cycle family needs V >= 3");
        const double deg = power_degree(2.0, in.v, in.n);
        double lam;
        if (total <= static_cast<double>(in.spectrum_guard)) {
            auto spec = regular_power_spectrum(cycle_spectrum(in.v), in.v, in.n).eigenvalues;
            lam = big_lambda(spec);
            b.cycle_ordering_holds = std::abs(spec.back()) >= spec[1] - 1e-9;
        } else {
            lam = -hong_bound(total);
            b.bound_on_bound = true;
        }
        b.degree = deg;
        b.lambda = lam;
        return tanner_rate_bound(deg, lam, y, total);
    };

    switch (in.family) {
        case ExpansionFamily::complete:
            b.degree = total - 1.0;
            b.lambda = 1.0;
            b.tanner_lower = tanner_rate_bound(b.degree, b.lambda, y, total);
            break;
        case ExpansionFamily::regular:
            if (!in.lambda) throw InvalidArgument("regular family needs Λ of the power");
            if (in.d >= in.v) throw InvalidArgument("degree must be below V");
            b.degree = power_degree(static_cast<double>(in.d), in.v, in.n);
            b.lambda = *in.lambda;
            b.tanner_lower = tanner_rate_bound(b.degree, b.lambda, y, total);
            break;
        case ExpansionFamily::cycle:
            b.cycle_lower = cycle_bound();
            b.tanner_lower = b.cycle_lower;
            break;
        case ExpansionFamily::general:
            b.cycle_lower = cycle_bound();
            break;
    }
    return b;
}

bool has_spanning_cycle(const Graph& g) {
    const std::size_t v = g.vertex_count();
    if (v > 20) throw GuardExceeded("spanning-cycle search limited to 20 vertices", "size");
    if (v < 3) return false;
    // reach[mask] bit j: a path from vertex 0 through exactly `mask` ends at j.
    const std::size_t full = std::size_t(1) << v;
    std::vector<std::uint32_t> reach(full, 0);
    reach[1] = 1;
    for (std::size_t mask = 1; mask < full; mask += 2) {
        const std::uint32_t ends = reach[mask];
        if (ends == 0) continue;
        for (std::size_t j = 0; j < v; ++j) {
            if (!(ends >> j & 1u)) continue;
            for (auto k = g.neighbors(j).find_first(); k != VertexSet::npos; k = g.neighbors(j).find_next(k)) {
                if (mask >> k & 1u) continue;
                reach[mask | (std::size_t(1) << k)] |= std::uint32_t(1) << k;
            }
        }
    }
    const std::uint32_t ends = reach[full - 1];
    for (auto k = g.neighbors(0).find_first(); k != VertexSet::npos; k = g.neighbors(0).find_next(k))
        if (ends >> k & 1u) return true;
    return false;
}

ExpansionReport expansion_report(const Graph& g, std::size_t n, const VertexSet& y, std::size_t guard) {
    const Graph gn = or_power(g, n, guard);
    ExpansionReport r;
    r.subset_size = y.count();
    r.neighborhood_size = open_neighborhood(gn, y).count();
    r.rate = expansion_rate(gn, y);
    r.adjacent_size = adjacent_set(gn, y).count();
    r.adjacency_rate = adjacency_rate(gn, y);
    r.regular = is_regular(g);

    const std::size_t v = g.vertex_count();
    ExpansionBoundsInput in;
    in.v = v;
    in.n = n;
    in.subset_size = r.subset_size;
    if (v >= 2 && g.edge_count() == v * (v - 1) / 2) {
        in.family = ExpansionFamily::complete;
    } else if (cycle_order(g)) {
        in.family = ExpansionFamily::cycle;
    } else if (r.regular) {
        in.family = ExpansionFamily::regular;
        in.d = degree(g, 0);
        in.lambda = big_lambda(regular_power_spectrum(graph_spectrum(g), v, n).eigenvalues);
    } else {
        in.family = ExpansionFamily::general;
    }
    r.family = in.family;
    if (v >= 3) {
        r.bounds = expansion_bounds(in);
        if (in.family != ExpansionFamily::cycle && v <= 20) r.spanning_cycle = has_spanning_cycle(g);
        if (in.family == ExpansionFamily::cycle) r.spanning_cycle = true;
        if (in.family != ExpansionFamily::cycle && in.family != ExpansionFamily::general) {
            in.family = ExpansionFamily::general;
            r.bounds.cycle_lower = expansion_bounds(in).cycle_lower;
        }
        // Keep the cycle bound only when g has a spanning cycle.
        if (!r.spanning_cycle.value_or(false)) r.bounds.cycle_lower.reset();
    } else {
        r.bounds = expansion_bounds(in);
    }
    return r;
}

VertexSet sample_subset(std::size_t total, std::size_t size, std::uint64_t seed) {
    if (size == 0 || size > total) throw InvalidArgument("sample size must lie in [1, total]");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> pool(total);
    for (std::size_t i = 0; i < total; ++i) pool[i] = i;
    VertexSet out(total);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
        std::swap(pool[i], pool[j]);
        out.set(pool[i]);
    }
    return out;
}

LambdaRelation induced_lambda_relation_check(const Graph& g, std::size_t n, std::size_t l, std::size_t guard) {
    if (!is_regular(g)) throw InvalidArgument("relation check needs a regular graph");
    const Graph gn = or_power(g, n, guard);
    const Graph block = subgraph_view(gn, l);
    const auto full = graph_spectrum(gn);
    LambdaRelation r;
    r.lhs = block.vertex_count() > 0 ? graph_spectrum(block).largest() : 0.0;
    r.lambda2 = full.eigenvalues.size() > 1 ? full.eigenvalues[1] : full.eigenvalues[0];
    r.degree = static_cast<double>(degree(gn, 0));
    r.rhs = r.lambda2 + (r.degree - r.lambda2) / static_cast<double>(g.vertex_count());
    r.holds = r.lhs <= r.rhs + 1e-9;
    return r;
}

}  // namespace chromacode
