#include "chromacode/entropy.hpp"

#include "chromacode/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>

namespace chromacode {

double entropy_bits(const std::vector<Rational>& pmf) {
    double h = 0;
    for (const auto& p : pmf) {
        if (p <= 0) continue;
        double x = to_double(p);
        h -= x * std::log2(x);
    }
    return h;
}

std::vector<Rational> uniform_pmf(std::size_t n) {
    if (n == 0) throw InvalidArgument("uniform distribution needs n >= 1");
    return std::vector<Rational>(n, Rational(1, static_cast<long long>(n)));
}

namespace {

void check_vertex_pmf(const Graph& g, const std::vector<Rational>& vertex_pmf) {
    if (vertex_pmf.size() != g.vertex_count()) throw InvalidArgument("vertex distribution has wrong length");
    for (const auto& p : vertex_pmf)
        if (p < 0) throw InvalidArgument("negative vertex probability");
    if (sum(vertex_pmf) != 1) throw InvalidArgument("vertex distribution does not sum to 1");
}

}  // namespace

ColoringPMF color_distribution(const Coloring& c, const std::vector<Rational>& vertex_pmf) {
    if (c.colors.size() != vertex_pmf.size()) throw InvalidArgument("coloring and distribution lengths differ");
    ColoringPMF out{std::vector<Rational>(c.palette, Rational(0))};
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (c.colors[v] >= c.palette) throw InvalidArgument("color id exceeds palette");
        out.probs[c.colors[v]] += vertex_pmf[v];
    }
    return out;
}

ColoringEntropy coloring_entropy(const Graph& g, const Coloring& c, const std::vector<Rational>& vertex_pmf) {
    check_vertex_pmf(g, vertex_pmf);
    if (!is_valid_coloring(g, c)) throw InvalidArgument("coloring is not valid");
    ColoringEntropy out;
    out.pmf = color_distribution(c, vertex_pmf);
    out.bits = entropy_bits(out.pmf.probs);
    return out;
}

namespace {

class MinEntropySearch {
public:
    MinEntropySearch(const Graph& g, const std::vector<Rational>& pmf) : n_(g.vertex_count()), weight_(n_) {
        for (std::size_t v = 0; v < n_; ++v) {
            weight_[v] = to_double(pmf[v]);
            std::uint64_t nb = 0;
            for (std::size_t u = 0; u < n_; ++u)
                if (g.adjacent(v, u)) nb |= (1ull << u);
            adj_.push_back(nb);
        }
    }

    double solve(std::uint64_t rem) {
        if (rem == 0) return 0.0;
        if (auto it = memo_.find(rem); it != memo_.end()) return it->second.first;
        const int low = std::countr_zero(rem);
        const std::uint64_t lowbit = 1ull << low;
        std::vector<std::pair<double, std::uint64_t>> found;
        enumerate(rem, lowbit, (rem & ~adj_[low]) & ~lowbit & ~(lowbit - 1), weight_[low], found);
        double best = std::numeric_limits<double>::infinity();
        std::uint64_t best_set = 0;
        for (const auto& [w, set] : found) {
            double term = (w > 0) ? -w * std::log2(w) : 0.0;
            double total = term + solve(rem & ~set);
            if (total < best - 1e-15) {
                best = total;
                best_set = set;
            }
        }
        memo_.emplace(rem, std::make_pair(best, best_set));
        return best;
    }

    std::vector<std::uint64_t> classes(std::uint64_t rem) const {
        std::vector<std::uint64_t> out;
        while (rem != 0) {
            auto set = memo_.at(rem).second;
            out.push_back(set);
            rem &= ~set;
        }
        return out;
    }

private:
    void enumerate(std::uint64_t rem, std::uint64_t cur, std::uint64_t cand, double w,
                   std::vector<std::pair<double, std::uint64_t>>& out) {
        out.emplace_back(w, cur);
        while (cand != 0) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            enumerate(rem, cur | (1ull << v), cand & ~adj_[v], w + weight_[v], out);
        }
    }

    std::size_t n_;
    std::vector<double> weight_;
    std::vector<std::uint64_t> adj_;
    std::unordered_map<std::uint64_t, std::pair<double, std::uint64_t>> memo_;
};

}  // namespace

ChromaticEntropy chromatic_entropy_bruteforce(const Graph& g, const std::vector<Rational>& vertex_pmf,
                                              std::size_t guard) {
    check_guard(g.vertex_count(), std::min<std::size_t>(guard, 64), "brute-force chromatic entropy");
    check_vertex_pmf(g, vertex_pmf);
    const std::size_t n = g.vertex_count();
    MinEntropySearch search(g, vertex_pmf);
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    search.solve(all);
    std::vector<ColorId> colors(n, 0);
    ColorId next = 0;
    for (auto set : search.classes(all)) {
        for (std::size_t v = 0; v < n; ++v)
            if ((set >> v) & 1u) colors[v] = next;
        ++next;
    }
    ChromaticEntropy out;
    out.witness = make_coloring(std::move(colors));
    out.pmf = color_distribution(out.witness, vertex_pmf);
    out.bits = entropy_bits(out.pmf.probs);
    return out;
}

namespace {

BigInt big_pow(std::size_t base, std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= base;
    return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt rational_ceil(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num >= 0) return ceil_div(num, den);
    return -((-num) / den);
}

// Fills alphas[1..t] top-down, each as large as the ordering and the remainder allow.
bool fill_greedy(std::vector<BigInt>& alphas, const std::vector<BigInt>& sizes, std::size_t t, const BigInt& remainder,
                 std::size_t mis, AlphaOrdering ordering) {
    if (t == 0) return remainder == 0;
    const BigInt& cap_next = alphas[t + 1];
    BigInt cap = (ordering == AlphaOrdering::scaled) ? cap_next / mis : cap_next;
    // Lowest feasible sums for levels 1..t.
    BigInt min_lower = 0;
    {
        BigInt a = 1;  // alpha_0
        for (std::size_t j = 1; j <= t; ++j) {
            a = (ordering == AlphaOrdering::scaled) ? a * mis : std::max<BigInt>(a, 1);
            min_lower += a * sizes[j];
        }
    }
    if (remainder < min_lower) return false;
    BigInt hi = std::min<BigInt>(cap, remainder / sizes[t]);
    for (BigInt a = hi; a >= 1; --a) {
        BigInt rest = remainder - a * sizes[t];
        // Upper reach of the lower levels with every alpha_j <= a.
        BigInt reach = 0;
        BigInt c = a;
        for (std::size_t j = t; j-- > 1;) {
            c = (ordering == AlphaOrdering::scaled) ? c / mis : c;
            reach += c * sizes[j];
        }
        if (rest > reach) return false;
        alphas[t] = a;
        if (fill_greedy(alphas, sizes, t - 1, rest, mis, ordering)) return true;
    }
    return false;
}

}  // namespace

bool is_feasible_profile(const AlphaProfile& p, const BigInt& vertex_total, AlphaOrdering ordering) {
    if (p.alphas.empty() || p.alphas.size() != p.mis_sizes.size()) return false;
    if (p.alphas[0] != 1) return false;
    BigInt total = 0;
    for (std::size_t t = 0; t < p.alphas.size(); ++t) {
        if (p.alphas[t] < 1) return false;
        total += p.alphas[t] * p.mis_sizes[t];
        if (t > 0) {
            BigInt need = p.alphas[t - 1];
            if (ordering == AlphaOrdering::scaled) need *= p.mis_sizes[1];
            if (p.alphas[t] < need) return false;
        }
    }
    return total == vertex_total;
}

std::vector<Rational> profile_pmf(const AlphaProfile& p, const BigInt& vertex_total) {
    std::vector<Rational> out;
    for (std::size_t t = p.alphas.size(); t-- > 0;) {
        for (BigInt i = 0; i < p.alphas[t]; ++i) out.push_back(Rational(p.mis_sizes[t], vertex_total));
    }
    return out;
}

double profile_entropy(const AlphaProfile& p, const BigInt& vertex_total) {
    double h = 0;
    for (std::size_t t = 0; t < p.alphas.size(); ++t) {
        double x = to_double(Rational(p.mis_sizes[t], vertex_total));
        h -= p.alphas[t].convert_to<double>() * x * std::log2(x);
    }
    return h;
}

AlphaProfile complete_profile(std::size_t v, std::size_t mis, std::size_t n, const BigInt& alpha_n,
                              AlphaOrdering ordering) {
    AlphaProfile p;
    for (std::size_t t = 0; t <= n; ++t) p.mis_sizes.push_back(big_pow(mis, t));
    const BigInt total = big_pow(v, n);
    std::vector<BigInt> alphas(n + 2, 0);
    alphas[0] = 1;
    alphas[n] = alpha_n;
    if (n == 0) {
        if (total == 1 && alpha_n == 1) p.alphas = {1};
        return p;
    }
    BigInt rest = total - alpha_n * p.mis_sizes[n] - 1;
    if (rest < 0 || alpha_n < 1) return p;
    bool ok = (n == 1) ? rest == 0 : fill_greedy(alphas, p.mis_sizes, n - 1, rest, mis, ordering);
    if (!ok) return p;
    alphas.resize(n + 1);
    p.alphas = std::move(alphas);
    if (!is_feasible_profile(p, total, ordering)) p.alphas.clear();
    return p;
}

EntropyWindow alpha_entropy_window(std::size_t v, std::size_t mis, std::size_t n, AlphaOrdering ordering) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    if (mis == 0 || mis > v) throw InvalidArgument("independence number must lie in [1, V]");
    EntropyWindow w;
    w.ordering = ordering;
    const BigInt total = big_pow(v, n);
    // alpha_{t} <= alpha_n / mis^(n-t) gives V^n <= alpha_n * sum_t mis^(2t-n).
    Rational denom = 0;
    for (std::size_t t = 0; t <= n; ++t) denom += Rational(big_pow(mis, 2 * t), big_pow(mis, n));
    w.alpha_lower = Rational(total) / denom;
    w.alpha_min = rational_ceil(w.alpha_lower);
    w.alpha_max = (total - 1) / big_pow(mis, n);

    auto scan = [&](const BigInt& from, const BigInt& to) {
        std::vector<AlphaProfile> found;
        for (BigInt a = to; a >= from && a >= 1; --a) {
            auto p = complete_profile(v, mis, n, a, ordering);
            if (!p.alphas.empty()) {
                found.push_back(p);
                break;
            }
        }
        for (BigInt a = std::max<BigInt>(from, 1); a <= to; ++a) {
            auto p = complete_profile(v, mis, n, a, ordering);
            if (!p.alphas.empty()) {
                found.push_back(p);
                break;
            }
        }
        return found;
    };
    auto found = scan(w.alpha_min, w.alpha_max);
    if (found.empty()) {
        w.relaxed_lower = true;
        found = scan(1, w.alpha_max);
    }
    if (found.size() != 2) throw Error("alpha constraints admit no feasible profile");
    w.lo_profile = found[0];
    w.hi_profile = found[1];
    w.lo = profile_entropy(w.lo_profile, total) / static_cast<double>(n);
    w.hi = profile_entropy(w.hi_profile, total) / static_cast<double>(n);
    return w;
}

EntropyWindow odd_cycle_entropy_upper_bound(std::size_t k, std::size_t n, AlphaOrdering ordering) {
    if (k < 2) throw InvalidArgument("odd cycle entropy bound needs k >= 2");
    return alpha_entropy_window(2 * k + 1, k, n, ordering);
}

EntropyWindow general_entropy_upper_bound(const Graph& g, std::size_t n, AlphaOrdering ordering,
                                          std::size_t mis_guard) {
    auto mis = maximal_independent_sets(g, mis_guard);
    return alpha_entropy_window(g.vertex_count(), mis.max_size, n, ordering);
}

double fractional_entropy_lower_bound(std::size_t v, const std::vector<Rational>* source_pmf) {
    if (v % 2 == 0 || v < 5) throw InvalidArgument("fractional lower bound needs odd V = 2k+1 with k >= 2");
    if (source_pmf != nullptr) {
        if (source_pmf->size() != v) throw InvalidArgument("source distribution has wrong length");
        for (const auto& p : *source_pmf)
            if (p != Rational(1, static_cast<long long>(v)))
                throw UnsupportedInput("fractional lower bound assumes a uniform source");
    }
    const double k = static_cast<double>((v - 1) / 2);
    return std::log2(static_cast<double>(v) / k);
}

namespace {

struct HuffNode {
    Rational p;
    ColorId min_id;
    int left = -1;
    int right = -1;
};

}  // namespace

HuffmanCode huffman_code(const ColoringPMF& pmf) {
    if (pmf.probs.empty()) throw InvalidArgument("Huffman code needs a nonempty distribution");
    HuffmanCode code;
    std::vector<HuffNode> nodes;
    for (ColorId c = 0; c < pmf.probs.size(); ++c) {
        if (pmf.probs[c] < 0) throw InvalidArgument("negative probability");
        if (pmf.probs[c] == 0) {
            code.warnings.push_back("color " + std::to_string(c) + " has zero probability and was dropped");
            continue;
        }
        nodes.push_back(HuffNode{pmf.probs[c], c});
    }
    if (nodes.empty()) throw InvalidArgument("Huffman code needs positive probability mass");
    auto cmp = [&](int a, int b) {
        if (nodes[a].p != nodes[b].p) return nodes[a].p > nodes[b].p;
        return nodes[a].min_id > nodes[b].min_id;
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
    const int leaves = static_cast<int>(nodes.size());
    for (int i = 0; i < leaves; ++i) heap.push(i);
    while (heap.size() > 1) {
        int a = heap.top();
        heap.pop();
        int b = heap.top();
        heap.pop();
        nodes.push_back(HuffNode{nodes[a].p + nodes[b].p, std::min(nodes[a].min_id, nodes[b].min_id), a, b});
        heap.push(static_cast<int>(nodes.size()) - 1);
    }
    std::vector<std::pair<int, std::string>> stack{{heap.top(), ""}};
    while (!stack.empty()) {
        auto [idx, prefix] = stack.back();
        stack.pop_back();
        if (nodes[idx].left < 0) {
            code.codewords[nodes[idx].min_id] = prefix;
            continue;
        }
        stack.emplace_back(nodes[idx].left, prefix + "0");
        stack.emplace_back(nodes[idx].right, prefix + "1");
    }
    code.average_length = 0;
    std::vector<Rational> positive;
    for (int i = 0; i < leaves; ++i) {
        code.average_length += nodes[i].p * static_cast<long long>(code.codewords[nodes[i].min_id].size());
        positive.push_back(nodes[i].p);
    }
    code.entropy = entropy_bits(positive);
    return code;
}

std::vector<ColorId> decode_prefix_stream(const HuffmanCode& code, const std::string& bits) {
    std::map<std::string, ColorId> inverse;
    for (const auto& [c, w] : code.codewords) inverse.emplace(w, c);
    std::vector<ColorId> out;
    if (inverse.size() == 1 && inverse.begin()->first.empty()) {
        if (!bits.empty()) throw InvalidArgument("single-symbol code carries no bits");
        return out;
    }
    std::string cur;
    for (char b : bits) {
        if (b != '0' && b != '1') throw InvalidArgument("bitstream contains a non-binary character");
        cur.push_back(b);
        if (auto it = inverse.find(cur); it != inverse.end()) {
            out.push_back(it->second);
            cur.clear();
        }
    }
    if (!cur.empty()) throw InvalidArgument("bitstream ends inside a codeword");
    return out;
}

}  // namespace chromacode
