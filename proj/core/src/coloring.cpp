#include "chromacode/coloring.hpp"

#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace chromacode {

Coloring make_coloring(std::vector<ColorId> raw) {
    std::map<ColorId, ColorId> remap;
    for (auto c : raw) remap.emplace(c, 0);
    ColorId next = 0;
    for (auto& [from, to] : remap) to = next++;
    for (auto& c : raw) c = remap[c];
    return Coloring{std::move(raw), remap.size()};
}

bool is_valid_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.vertex_count()) {
        throw InvalidArgument("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    for (const auto& [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::size_t run() {
        VertexSet all(g_.vertex_count());
        all.set();
        expand(all, 0);
        return best_;
    }

private:
    // Greedy coloring of the candidates bounds the clique they can still add.
    std::size_t color_bound(const VertexSet& cand) const {
        VertexSet left = cand;
        std::size_t colors = 0;
        while (left.any()) {
            ++colors;
            VertexSet avail = left;
            while (avail.any()) {
                const auto v = avail.find_first();
                left.reset(v);
                avail.reset(v);
                avail -= g_.neighbors(v);
            }
        }
        return colors;
    }

    void expand(VertexSet cand, std::size_t size) {
        if (cand.none()) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + color_bound(cand) <= best_) return;
        while (cand.any()) {
            if (size + cand.count() <= best_) return;
            const auto v = cand.find_first();
            expand(cand & g_.neighbors(v), size + 1);
            cand.reset(v);
        }
    }

    const Graph& g_;
    std::size_t best_ = 0;
};

}  // namespace

std::size_t max_clique_size(const Graph& g) { return CliqueSearch(g).run(); }

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::size_t lower, std::chrono::steady_clock::time_point deadline)
        : g_(g), n_(g.vertex_count()), lower_(lower), deadline_(deadline), color_(n_, kNone),
          count_(n_, std::vector<std::uint32_t>(n_ + 1, 0)), sat_(n_, 0), deg_(degrees(g)),
          best_(n_ + 1) {}

    void run() { search(0, 0); }
    std::size_t best() const { return best_; }
    const std::vector<std::size_t>& best_colors() const { return best_colors_; }
    std::size_t nodes() const { return nodes_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    VertexId pick() const {
        VertexId v = kNone;
        for (VertexId u = 0; u < n_; ++u) {
            if (color_[u] != kNone) continue;
            if (v == kNone || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && deg_[u] > deg_[v])) v = u;
        }
        return v;
    }

    void assign(VertexId v, std::size_t c) {
        color_[v] = c;
        const auto& nb = g_.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            if (count_[u][c]++ == 0) ++sat_[u];
    }

    void unassign(VertexId v) {
        const auto c = color_[v];
        const auto& nb = g_.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            if (--count_[u][c] == 0) --sat_[u];
        color_[v] = kNone;
    }

    void search(std::size_t colored, std::size_t used) {
        if (done_) return;
        if ((++nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() > deadline_) {
            throw TimeoutExceeded("exact chromatic number search timed out after " +
                                  std::to_string(nodes_) + " nodes");
        }
        if (colored == n_) {
            if (used < best_) {
                best_ = used;
                best_colors_ = color_;
                if (best_ <= lower_) done_ = true;
            }
            return;
        }
        const VertexId v = pick();
        for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
            if (c < used && count_[v][c] > 0) continue;
            assign(v, c);
            search(colored + 1, std::max(used, c + 1));
            unassign(v);
            if (done_) return;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t lower_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::size_t> color_;
    std::vector<std::vector<std::uint32_t>> count_;
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> deg_;
    std::size_t best_;
    std::vector<std::size_t> best_colors_;
    std::size_t nodes_ = 0;
    bool done_ = false;
};

}  // namespace

ExactColoringResult exact_chromatic_number(const Graph& g, const ExactOptions& options) {
    check_guard(g.vertex_count(), options.guard, "exact chromatic number");
    ExactColoringResult res;
    if (g.vertex_count() == 0) return res;
    res.clique_lower_bound = max_clique_size(g);
    DsaturSearch search(g, res.clique_lower_bound, std::chrono::steady_clock::now() + options.timeout);
    search.run();
    res.chi = search.best();
    res.witness = make_coloring(search.best_colors());
    res.nodes = search.nodes();
    return res;
}

Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw InvalidArgument("order is not a permutation of the vertices");
    std::vector<bool> seen(n, false);
    for (auto v : order) {
        if (v >= n || seen[v]) throw InvalidArgument("order is not a permutation of the vertices");
        seen[v] = true;
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> color(n, kNone);
    std::vector<bool> taken;
    for (auto v : order) {
        taken.assign(n + 1, false);
        const auto& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            if (color[u] != kNone) taken[color[u]] = true;
        std::size_t c = 0;
        while (taken[c]) ++c;
        color[v] = c;
    }
    return make_coloring(std::move(color));
}

Coloring greedy_coloring(const Graph& g) {
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    return greedy_coloring(g, order);
}

Coloring bipartite_power_coloring(const Graph& base, std::size_t n) {
    auto side = bipartition(base);
    if (!side) throw UnsupportedInput("base graph is not bipartite");
    const std::size_t total = checked_power(base.vertex_count(), n, std::size_t(1) << 40);
    TupleIndex index(base.vertex_count(), n);
    std::vector<ColorId> colors(total);
    for (std::size_t i = 0; i < total; ++i) {
        auto t = index.decode(i);
        ColorId c = 0;
        for (auto x : t) c = 2 * c + static_cast<ColorId>((*side)[x]);
        colors[i] = c;
    }
    return make_coloring(std::move(colors));
}

PowerColoring even_cycle_power_coloring(std::size_t k, std::size_t n, std::size_t guard) {
    if (k < 1 || n < 1) throw InvalidArgument("even cycle scheme needs k >= 1 and n >= 1");
    PowerColoring out;
    out.count = std::size_t(1) << n;
    // k = 1 is the single edge K2.
    Graph base = (k == 1) ? make_complete(2) : make_cycle(2 * k);
    out.power = or_power(base, n, guard);
    out.materialized = true;
    out.coloring = bipartite_power_coloring(base, n);
    if (!is_valid_coloring(out.power, *out.coloring)) throw Error("parity-vector coloring failed validation");
    return out;
}

std::size_t odd_cycle_recursive_count(std::size_t n) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    std::size_t m = 3;
    for (std::size_t t = 1; t < n; ++t) m = 2 * m + (m + 1) / 2;
    return m;
}

namespace {

void check_odd_cycle(std::size_t cycle_length) {
    if (cycle_length % 2 == 0) throw InvalidArgument("odd cycle scheme needs an odd cycle length");
    if (cycle_length < 5) {
        throw InvalidArgument("odd cycle scheme needs k >= 2; C3 is complete, use the exact solver");
    }
}

// Start offsets of consecutive windows of size b in Z_a around a cycle of length v,
// winding w times; nullopt when the steps cannot stay within [b, a-b].
std::optional<std::vector<std::size_t>> window_offsets(std::size_t v, std::size_t a, std::size_t b,
                                                       std::size_t w) {
    if (v * b > w * a || w * a > v * (a - std::min(a, b))) return std::nullopt;
    if (a < 2 * b) return std::nullopt;
    const std::size_t r = w * a - v * b;
    std::vector<std::size_t> offsets(v, 0);
    std::size_t pos = 0;
    for (std::size_t l = 0; l + 1 < v; ++l) {
        pos += b + (l + 1) * r / v - l * r / v;
        offsets[l + 1] = pos % a;
    }
    return offsets;
}

}  // namespace

BlockWindows odd_cycle_block_windows(std::size_t cycle_length, std::size_t n) {
    check_odd_cycle(cycle_length);
    if (n < 2) throw InvalidArgument("block windows exist for n >= 2");
    const std::size_t k = (cycle_length - 1) / 2;
    BlockWindows bw;
    bw.window = odd_cycle_recursive_count(n - 1);
    bw.palette = odd_cycle_recursive_count(n);
    auto offsets = window_offsets(cycle_length, bw.palette, bw.window, k);
    if (!offsets) throw Error("no window layout for the recursive palette");
    bw.offsets = std::move(*offsets);
    return bw;
}

std::vector<ColorId> odd_cycle_scheme_colors(std::size_t cycle_length, std::size_t n) {
    check_odd_cycle(cycle_length);
    if (n == 0) throw InvalidArgument("power must be at least 1");
    checked_power(cycle_length, n, std::size_t(1) << 26);
    std::vector<ColorId> colors(cycle_length, 0);
    for (std::size_t x = 0; x < cycle_length; ++x) colors[x] = x % 2;
    colors[cycle_length - 1] = 2;
    for (std::size_t t = 2; t <= n; ++t) {
        auto bw = odd_cycle_block_windows(cycle_length, t);
        std::vector<ColorId> next;
        next.reserve(colors.size() * cycle_length);
        for (std::size_t l = 0; l < cycle_length; ++l)
            for (auto c : colors) next.push_back((bw.offsets[l] + c) % bw.palette);
        colors = std::move(next);
    }
    return colors;
}

PowerColoring odd_cycle_power_coloring(std::size_t cycle_length, std::size_t n, std::size_t guard) {
    check_odd_cycle(cycle_length);
    PowerColoring out;
    out.count = odd_cycle_recursive_count(n);
    std::size_t total = 0;
    try {
        total = checked_power(cycle_length, n, guard);
    } catch (const GuardExceeded&) {
        return out;
    }
    (void)total;
    out.power = or_power(make_cycle(cycle_length), n, guard);
    out.materialized = true;
    out.coloring = make_coloring(odd_cycle_scheme_colors(cycle_length, n));
    if (!is_valid_coloring(out.power, *out.coloring)) throw Error("odd cycle scheme coloring failed validation");
    return out;
}

GreedyGain greedy_gain(std::size_t cycle_length, std::size_t n) {
    check_odd_cycle(cycle_length);
    boost::multiprecision::cpp_int three_n = 1;
    for (std::size_t i = 0; i < n; ++i) three_n *= 3;
    GreedyGain gg;
    gg.eta = Rational(three_n, boost::multiprecision::cpp_int(odd_cycle_recursive_count(n)));
    gg.reference_curve = std::pow(1.2, static_cast<double>(n));
    gg.ratio_curve = std::pow(1.2, static_cast<double>(n) - 1.0);
    return gg;
}

RegularPowerChromatic regular_power_chromatic(std::size_t d, std::size_t v, std::size_t n,
                                              const Graph* concrete, const ExactOptions& options) {
    if (d == 0 || n == 0 || v < d + 1) throw InvalidArgument("invalid d-regular parameters");
    if (v % 2 == 1) throw UnsupportedInput("out of proposition scope: V must be even");
    RegularPowerChromatic out;
    out.closed_form = 1;
    for (std::size_t i = 0; i < n; ++i) out.closed_form *= d;
    if (concrete != nullptr) {
        if (concrete->vertex_count() != v || !is_regular(*concrete) || degree(*concrete, 0) != d) {
            throw InvalidArgument("supplied graph is not " + std::to_string(d) + "-regular on " +
                                  std::to_string(v) + " vertices");
        }
        Graph power = or_power(*concrete, n, options.guard);
        out.exact = exact_chromatic_number(power, options).chi;
        out.agrees = (*out.exact == out.closed_form);
    }
    return out;
}

bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& fc) {
    if (fc.sets.size() != g.vertex_count()) throw InvalidArgument("fractional coloring has wrong length");
    for (const auto& s : fc.sets) {
        std::vector<ColorId> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() != fc.b || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        if (!sorted.empty() && sorted.back() >= fc.a) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        for (auto c : fc.sets[u])
            if (std::find(fc.sets[v].begin(), fc.sets[v].end(), c) != fc.sets[v].end()) return false;
    }
    return true;
}

namespace {

using Mask = unsigned __int128;

std::size_t popcount(Mask m) {
    return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(m)) +
                                    std::popcount(static_cast<std::uint64_t>(m >> 64)));
}

Mask low_bits(std::size_t k) { return k >= 128 ? ~Mask(0) : ((Mask(1) << k) - 1); }

// Vertices are visited so that each one has as many earlier neighbours as possible.
// Colors are introduced in increasing order, so the colors in use always form a prefix.
class BFoldSearch {
public:
    BFoldSearch(const Graph& g, std::size_t a, std::size_t b, std::chrono::steady_clock::time_point deadline)
        : g_(g), a_(a), b_(b), deadline_(deadline), sets_(g.vertex_count(), 0) {
        const std::size_t n = g.vertex_count();
        std::vector<std::size_t> links(n, 0);
        std::vector<bool> placed(n, false);
        const auto deg = degrees(g);
        for (std::size_t step = 0; step < n; ++step) {
            VertexId best = n;
            for (VertexId v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best == n || links[v] > links[best] || (links[v] == links[best] && deg[v] > deg[best])) best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            const auto& nb = g.neighbors(best);
            for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) ++links[u];
        }
    }

    bool run() { return g_.vertex_count() == 0 || extend(0, 0); }

    const std::vector<Mask>& sets() const { return sets_; }

private:
    bool extend(std::size_t depth, std::size_t used) {
        if (depth == order_.size()) return true;
        if ((++nodes_ & 4095u) == 0 && std::chrono::steady_clock::now() > deadline_) {
            throw TimeoutExceeded("b-fold coloring search timed out after " + std::to_string(nodes_) + " nodes");
        }
        const VertexId v = order_[depth];
        Mask forbidden = 0;
        const auto& nb = g_.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) forbidden |= sets_[u];
        const Mask old_free = low_bits(used) & ~forbidden;
        const std::size_t fresh = a_ - used;
        const std::size_t have = popcount(old_free);
        // Prefer reusing colors: take j old ones and b - j fresh ones.
        for (std::size_t j = std::min(b_, have) + 1; j-- > 0;) {
            if (b_ - j > fresh) break;
            const Mask fresh_part = low_bits(used + b_ - j) & ~low_bits(used);
            if (choose(v, depth, used + b_ - j, old_free, fresh_part, j)) return true;
        }
        return false;
    }

    bool choose(VertexId v, std::size_t depth, std::size_t used, Mask free, Mask picked, std::size_t need) {
        if (need == 0) {
            sets_[v] = picked;
            if (extend(depth + 1, used)) return true;
            sets_[v] = 0;
            return false;
        }
        if (popcount(free) < need) return false;
        const Mask low = free & (~free + 1);
        if (choose(v, depth, used, free & ~low, picked | low, need - 1)) return true;
        return choose(v, depth, used, free & ~low, picked, need);
    }

    const Graph& g_;
    std::size_t a_;
    std::size_t b_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<Mask> sets_;
    std::vector<VertexId> order_;
    std::size_t nodes_ = 0;
};

FractionalColoring from_masks(std::size_t a, std::size_t b, const std::vector<Mask>& masks) {
    FractionalColoring fc{a, b, {}};
    for (auto m : masks) {
        std::vector<ColorId> s;
        for (std::size_t c = 0; c < a; ++c)
            if ((m >> c) & 1u) s.push_back(c);
        fc.sets.push_back(std::move(s));
    }
    return fc;
}

std::optional<FractionalColoring> b_fold_search(const Graph& g, std::size_t a, std::size_t b,
                                                std::chrono::steady_clock::time_point deadline) {
    if (b == 0) throw InvalidArgument("fold size must be at least 1");
    if (a > kMaxFoldColors) throw GuardExceeded("b-fold search supports at most 128 colors", "size");
    if (a < b) return std::nullopt;
    BFoldSearch search(g, a, b, deadline);
    if (!search.run()) return std::nullopt;
    return from_masks(a, b, search.sets());
}

std::size_t independence_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexSet> complement(n, VertexSet(n));
    for (VertexId v = 0; v < n; ++v) {
        complement[v] = ~g.neighbors(v);
        complement[v].reset(v);
    }
    return max_clique_size(Graph(n, std::move(complement)));
}

}  // namespace

std::optional<FractionalColoring> find_b_fold_coloring(const Graph& g, std::size_t a, std::size_t b,
                                                       std::chrono::milliseconds timeout) {
    return b_fold_search(g, a, b, std::chrono::steady_clock::now() + timeout);
}

std::size_t b_fold_chromatic_number(const Graph& g, std::size_t b, std::size_t guard,
                                    std::chrono::milliseconds timeout) {
    check_guard(g.vertex_count(), guard, "b-fold chromatic number");
    if (b == 0) throw InvalidArgument("fold size must be at least 1");
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    // Start at max(b * omega, ceil(b * n / alpha)).
    const std::size_t alpha = independence_number(g);
    const std::size_t start = std::max(b * max_clique_size(g), (b * n + alpha - 1) / alpha);
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    for (std::size_t a = start;; ++a) {
        if (b_fold_search(g, a, b, deadline)) return a;
    }
}

std::vector<std::size_t> power_chromatic_numbers(const Graph& g, std::size_t n, const ExactOptions& options) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    std::vector<std::size_t> out;
    out.push_back(exact_chromatic_number(g, options).chi);
    for (std::size_t t = 2; t <= n; ++t) {
        out.push_back(b_fold_chromatic_number(g, out.back(), options.guard, options.timeout));
    }
    return out;
}

FractionalCycleReport fractional_chromatic_cycle(std::size_t k, std::size_t b) {
    if (k < 2 || b < 1) throw InvalidArgument("fractional cycle coloring needs k >= 2 and b >= 1");
    const std::size_t v = 2 * k + 1;
    FractionalCycleReport rep;
    rep.claimed = 2 * b + 1;
    rep.chi_f = Rational(static_cast<long long>(v), static_cast<long long>(k));
    for (std::size_t a = 2 * b;; ++a) {
        for (std::size_t w = 1; w < v; ++w) {
            auto offsets = window_offsets(v, a, b, w);
            if (!offsets) continue;
            FractionalColoring fc{a, b, {}};
            for (auto o : *offsets) {
                std::vector<ColorId> s;
                for (std::size_t j = 0; j < b; ++j) s.push_back((o + j) % a);
                std::sort(s.begin(), s.end());
                fc.sets.push_back(std::move(s));
            }
            if (!is_valid_fractional_coloring(make_cycle(v), fc)) throw Error("window construction failed validation");
            rep.windows_colors = a;
            rep.windows = std::move(fc);
            return rep;
        }
    }
}

Rational fractional_chromatic_cycle_power(std::size_t k, std::size_t n) {
    if (k < 2) throw InvalidArgument("fractional cycle power needs k >= 2");
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        num *= (2 * k + 1);
        den *= k;
    }
    return Rational(num, den);
}

}  // namespace chromacode
