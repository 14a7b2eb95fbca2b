#include "chromacode/codec.hpp"

#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace chromacode {

std::string to_string(ColoringStrategy s) {
    switch (s) {
        case ColoringStrategy::exact: return "exact";
        case ColoringStrategy::greedy: return "greedy";
        case ColoringStrategy::even_cycle: return "even-cycle";
        case ColoringStrategy::odd_cycle: return "odd-cycle";
        case ColoringStrategy::automatic: return "auto";
    }
    return "unknown";
}

ColoringStrategy coloring_strategy_from_string(const std::string& s) {
    for (auto v : {ColoringStrategy::exact, ColoringStrategy::greedy, ColoringStrategy::even_cycle,
                   ColoringStrategy::odd_cycle, ColoringStrategy::automatic}) {
        if (to_string(v) == s) return v;
    }
    throw InvalidArgument("unknown coloring strategy '" + s + "'");
}

namespace {

Coloring odd_cycle_relabelled(const Graph& g, std::size_t n) {
    auto order = cycle_order(g);
    const std::size_t v = g.vertex_count();
    if (!order || v % 2 == 0) throw UnsupportedInput("odd-cycle strategy needs an odd cycle");
    std::vector<std::size_t> pos(v);
    for (std::size_t p = 0; p < v; ++p) pos[(*order)[p]] = p;
    const auto scheme = odd_cycle_scheme_colors(v, n);
    const TupleIndex idx(v, n);
    std::vector<ColorId> raw(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto t = idx.decode(i);
        for (auto& x : t) x = pos[x];
        raw[i] = scheme[idx.encode(t)];
    }
    return make_coloring(std::move(raw));
}

std::vector<Rational> block_product(const std::vector<Rational>& marginal, std::size_t n) {
    const TupleIndex idx(marginal.size(), n);
    std::vector<Rational> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational p = 1;
        for (auto x : idx.decode(i)) p *= marginal[x];
        out[i] = p;
    }
    return out;
}

struct SupportPair {
    std::size_t a;
    std::size_t b;
    Rational p;
};

std::vector<SupportPair> support(const JointPMF& pmf) {
    std::vector<SupportPair> s;
    for (std::size_t a = 0; a < pmf.x1; ++a)
        for (std::size_t b = 0; b < pmf.x2; ++b)
            if (pmf(a, b) > 0) s.push_back({a, b, pmf(a, b)});
    return s;
}

// Calls visit(block1, block2, outcomes) for every positive-probability block pair.
template <class Visit>
std::size_t for_each_block_pair(const FunctionSpec& spec, const JointPMF& pmf, std::size_t n, std::size_t guard,
                                Visit&& visit) {
    const auto sup = support(pmf);
    const std::size_t total = checked_power(sup.size(), n, guard);
    const TupleIndex pick(sup.size(), n);
    const TupleIndex idx1(pmf.x1, n), idx2(pmf.x2, n);
    std::vector<std::size_t> t1(n), t2(n);
    std::vector<int> out(n);
    for (std::size_t i = 0; i < total; ++i) {
        const auto choice = pick.decode(i);
        for (std::size_t k = 0; k < n; ++k) {
            t1[k] = sup[choice[k]].a;
            t2[k] = sup[choice[k]].b;
            out[k] = spec(t1[k], t2[k]);
        }
        visit(idx1.encode(t1), idx2.encode(t2), t1, t2, out);
    }
    return total;
}

SourcePlan make_source(const FunctionSpec& spec, const JointPMF& pmf, Source s, std::size_t n,
                       ColoringStrategy strategy, std::size_t guard) {
    SourcePlan sp;
    sp.graph = build_characteristic_graph(spec, pmf, s);
    sp.power = or_power(sp.graph, n, guard);
    sp.coloring = color_power(sp.graph, sp.power, n, strategy);
    sp.block_pmf = block_product(s == Source::first ? pmf.marginal1() : pmf.marginal2(), n);
    sp.color_pmf = color_distribution(sp.coloring, sp.block_pmf);
    sp.code = huffman_code(sp.color_pmf);
    return sp;
}

std::string pair_text(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::string s = "x1=(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    s += ") x2=(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

}  // namespace

Coloring color_power(const Graph& g, const Graph& power, std::size_t n, ColoringStrategy strategy,
                     const ExactOptions& exact) {
    Coloring c;
    switch (strategy) {
        case ColoringStrategy::exact: c = exact_chromatic_number(power, exact).witness; break;
        case ColoringStrategy::greedy: c = greedy_coloring(power); break;
        case ColoringStrategy::even_cycle: c = bipartite_power_coloring(g, n); break;
        case ColoringStrategy::odd_cycle: c = odd_cycle_relabelled(g, n); break;
        case ColoringStrategy::automatic:
            if (bipartition(g)) {
                c = bipartite_power_coloring(g, n);
            } else if (cycle_order(g) && g.vertex_count() >= 5) {
                c = odd_cycle_relabelled(g, n);
            } else if (power.vertex_count() <= 32) {
                c = exact_chromatic_number(power, exact).witness;
            } else {
                c = greedy_coloring(power);
            }
            break;
    }
    if (!is_valid_coloring(power, c)) throw Error("strategy " + to_string(strategy) + " produced an invalid coloring");
    return c;
}

CodecPlan build_codec(const FunctionSpec& spec, const JointPMF& pmf, std::size_t n, ColoringStrategy strategy,
                      std::size_t power_guard, std::size_t pair_guard) {
    if (n == 0) throw InvalidArgument("block length must be at least 1");
    if (spec.x1 != pmf.x1 || spec.x2 != pmf.x2) throw InvalidArgument("function table and distribution disagree");
    CodecPlan plan;
    plan.n = n;
    plan.spec = spec;
    plan.pmf = pmf;
    plan.strategy = strategy;
    plan.first = make_source(spec, pmf, Source::first, n, strategy, power_guard);
    plan.second = make_source(spec, pmf, Source::second, n, strategy, power_guard);
    const TupleIndex idx1(pmf.x1, n), idx2(pmf.x2, n);
    for_each_block_pair(spec, pmf, n, pair_guard,
                        [&](std::size_t b1, std::size_t b2, const auto& t1, const auto& t2, const auto& out) {
                            const auto k = plan.key(plan.first.coloring.colors[b1], plan.second.coloring.colors[b2]);
                            auto [it, fresh] = plan.decoder.try_emplace(k, DecoderEntry{out, b1, b2});
                            if (!fresh && it->second.outcomes != out) {
                                throw AmbiguityError("color pair shared by " +
                                                     pair_text(idx1.decode(it->second.block1),
                                                               idx2.decode(it->second.block2)) +
                                                     " and " + pair_text(t1, t2) + " with different outcomes");
                            }
                        });
    return plan;
}

EncodedBlock encode_block(const CodecPlan& plan, Source source, const std::vector<std::size_t>& block) {
    const auto& sp = plan.source(source);
    const std::size_t alphabet = source == Source::first ? plan.pmf.x1 : plan.pmf.x2;
    if (block.size() != plan.n) {
        throw InvalidArgument("block has length " + std::to_string(block.size()) + ", expected " +
                              std::to_string(plan.n));
    }
    for (auto x : block)
        if (x >= alphabet) throw InvalidArgument("symbol " + std::to_string(x) + " outside the alphabet");
    const ColorId c = sp.coloring.colors[TupleIndex(alphabet, plan.n).encode(block)];
    auto it = sp.code.codewords.find(c);
    if (it == sp.code.codewords.end()) throw UnsupportedInput("block has zero probability");
    return {c, it->second};
}

std::vector<int> decode_colors(const CodecPlan& plan, ColorId c1, ColorId c2) {
    if (c1 >= plan.first.coloring.palette || c2 >= plan.second.coloring.palette) {
        throw UnsupportedInput("color outside the palette");
    }
    auto it = plan.decoder.find(plan.key(c1, c2));
    if (it == plan.decoder.end()) {
        throw UnsupportedInput("unsupported input: color pair (" + std::to_string(c1) + ", " + std::to_string(c2) +
                               ") has zero probability");
    }
    return it->second.outcomes;
}

namespace {

ColorId decode_one(const HuffmanCode& code, const std::string& bits) {
    if (code.codewords.size() == 1 && code.codewords.begin()->second.empty()) {
        if (!bits.empty()) throw InvalidArgument("single-symbol code carries no bits");
        return code.codewords.begin()->first;
    }
    const auto symbols = decode_prefix_stream(code, bits);
    if (symbols.size() != 1) throw InvalidArgument("expected exactly one codeword per source");
    return symbols.front();
}

}  // namespace

std::vector<int> decode_bits(const CodecPlan& plan, const std::string& bits1, const std::string& bits2) {
    return decode_colors(plan, decode_one(plan.first.code, bits1), decode_one(plan.second.code, bits2));
}

RoundTripReport round_trip(const CodecPlan& plan, std::size_t pair_guard) {
    RoundTripReport r;
    r.pairs_checked = for_each_block_pair(
        plan.spec, plan.pmf, plan.n, pair_guard, [&](std::size_t, std::size_t, const auto& t1, const auto& t2, const auto& out) {
            const auto e1 = encode_block(plan, Source::first, t1);
            const auto e2 = encode_block(plan, Source::second, t2);
            if (decode_bits(plan, e1.bits, e2.bits) != out) ++r.failures;
        });
    return r;
}

namespace {

SourceRate reference_rates(const SourcePlan& sp, const std::vector<Rational>& marginal, std::size_t n) {
    SourceRate r;
    const double dn = static_cast<double>(n);
    r.huffman = to_double(sp.code.average_length) / dn;
    r.coloring_entropy = entropy_bits(sp.color_pmf.probs) / dn;
    r.source_entropy = entropy_bits(marginal);
    if (sp.power.vertex_count() <= 16) {
        r.chromatic_entropy = chromatic_entropy_bruteforce(sp.power, sp.block_pmf, 16).bits / dn;
    }
    const std::size_t v = sp.graph.vertex_count();
    const bool uniform = std::all_of(marginal.begin(), marginal.end(), [&](const Rational& p) { return p == marginal[0]; });
    if (uniform && v >= 5 && v % 2 == 1 && cycle_order(sp.graph)) {
        r.fractional_lower = fractional_entropy_lower_bound(v, &marginal);
        const auto w = odd_cycle_entropy_upper_bound((v - 1) / 2, n);
        r.window_lo = w.lo;
        r.window_hi = w.hi;
    }
    return r;
}

}  // namespace

RateReport simulate(const CodecPlan& plan, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw InvalidArgument("samples must be at least 1");
    RateReport rep;
    rep.n = plan.n;
    rep.samples = samples;
    rep.seed = seed;
    rep.first = reference_rates(plan.first, plan.pmf.marginal1(), plan.n);
    rep.second = reference_rates(plan.second, plan.pmf.marginal2(), plan.n);

    const auto sup = support(plan.pmf);
    std::vector<double> cdf;
    double acc = 0;
    for (const auto& s : sup) cdf.push_back(acc += to_double(s.p));
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> t1(plan.n), t2(plan.n);
    std::vector<int> want(plan.n);
    for (std::size_t i = 0; i < samples; ++i) {
        for (std::size_t k = 0; k < plan.n; ++k) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
            auto pos = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            pos = std::min(pos, sup.size() - 1);
            t1[k] = sup[pos].a;
            t2[k] = sup[pos].b;
            want[k] = plan.spec(t1[k], t2[k]);
        }
        const auto e1 = encode_block(plan, Source::first, t1);
        const auto e2 = encode_block(plan, Source::second, t2);
        rep.first.total_bits += e1.bits.size();
        rep.second.total_bits += e2.bits.size();
        if (decode_bits(plan, e1.bits, e2.bits) != want) {
            rep.lossless = false;
            throw Error("decode mismatch at sample " + std::to_string(i) + ": " + pair_text(t1, t2));
        }
    }
    const double denom = static_cast<double>(samples) * static_cast<double>(plan.n);
    rep.first.empirical = static_cast<double>(rep.first.total_bits) / denom;
    rep.second.empirical = static_cast<double>(rep.second.total_bits) / denom;
    return rep;
}

RateReport simulate(const FunctionSpec& spec, const JointPMF& pmf, std::size_t n, std::size_t samples,
                    std::uint64_t seed, ColoringStrategy strategy) {
    return simulate(build_codec(spec, pmf, n, strategy), samples, seed);
}

}  // namespace chromacode
