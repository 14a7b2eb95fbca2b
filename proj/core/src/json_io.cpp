#include "chromacode/json_io.hpp"

#include "chromacode/errors.hpp"

#include <fstream>
#include <sstream>

namespace chromacode {

namespace {

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
        throw InvalidArgument(std::string("expected a nonnegative integer field '") + key + "'");
    }
    return j[key].get<std::size_t>();
}

Json alphas_to_json(const AlphaProfile& p) {
    Json a = Json::array();
    for (const auto& x : p.alphas) a.push_back(x.str());
    return a;
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    Json j{{"vertices", g.vertex_count()}, {"edges", edges}};
    if (g.tuple_shape()) {
        j["tuple_base"] = g.tuple_shape()->base;
        j["tuple_len"] = g.tuple_shape()->length;
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("graph JSON must be an object");
    if (j.contains("kind")) {
        const auto kind = j["kind"].get<std::string>();
        const std::size_t size = get_size(j, "size");
        if (kind == "cycle") return make_cycle(size);
        if (kind == "complete") return make_complete(size);
        if (kind == "path") return make_path(size);
        if (kind == "prism") return make_prism();
        if (kind != "custom") throw InvalidArgument("unknown graph kind '" + kind + "'");
    }
    const std::size_t v = j.contains("vertices") ? get_size(j, "vertices") : get_size(j, "size");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be a pair");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    return make_custom(v, edges);
}

Json to_json(const FunctionSpec& spec) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < spec.x1; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < spec.x2; ++b) row.push_back(spec.labels[static_cast<std::size_t>(spec(a, b))]);
        rows.push_back(row);
    }
    return {{"x1", spec.x1}, {"x2", spec.x2}, {"f", rows}};
}

FunctionSpec function_spec_from_json(const Json& j) {
    const std::size_t x1 = get_size(j, "x1"), x2 = get_size(j, "x2");
    if (!j.contains("f") || !j["f"].is_array()) throw InvalidArgument("function JSON needs a table 'f'");
    const auto& f = j["f"];
    bool all_int = true;
    for (const auto& row : f)
        for (const auto& x : row) all_int = all_int && x.is_number_integer();
    if (all_int) return make_function_spec(x1, x2, f.get<std::vector<std::vector<long long>>>());
    std::vector<std::vector<std::string>> s;
    for (const auto& row : f) {
        s.emplace_back();
        for (const auto& x : row) s.back().push_back(x.is_string() ? x.get<std::string>() : x.dump());
    }
    return make_function_spec_labels(x1, x2, s);
}

Json to_json(const JointPMF& pmf) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < pmf.x1; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < pmf.x2; ++b) row.push_back(format_rational(pmf(a, b)));
        rows.push_back(row);
    }
    return {{"x1", pmf.x1}, {"x2", pmf.x2}, {"p", rows}};
}

JointPMF joint_pmf_from_json(const Json& j, std::size_t x1, std::size_t x2) {
    if (j.is_string() && j.get<std::string>() == "uniform") return uniform_joint_pmf(x1, x2);
    if (!j.is_object() || !j.contains("p")) throw InvalidArgument("distribution JSON needs a field 'p'");
    if (j.contains("x1") && get_size(j, "x1") != x1) throw InvalidArgument("distribution x1 disagrees with the function");
    if (j.contains("x2") && get_size(j, "x2") != x2) throw InvalidArgument("distribution x2 disagrees with the function");
    if (j["p"].is_string() && j["p"].get<std::string>() == "uniform") return uniform_joint_pmf(x1, x2);
    std::vector<Rational> probs;
    if (j["p"].size() != x1) throw InvalidArgument("distribution has the wrong number of rows");
    for (const auto& row : j["p"]) {
        if (row.size() != x2) throw InvalidArgument("distribution row has the wrong length");
        for (const auto& x : row) probs.push_back(rational_from_json(x));
    }
    return make_joint_pmf(x1, x2, std::move(probs));
}

Json to_json(const Coloring& c) { return {{"colors", c.colors}, {"palette", c.palette}}; }

Coloring coloring_from_json(const Json& j) {
    if (!j.contains("colors")) throw InvalidArgument("coloring JSON needs 'colors'");
    Coloring c{j["colors"].get<std::vector<ColorId>>(), 0};
    for (auto x : c.colors) c.palette = std::max(c.palette, x + 1);
    if (j.contains("palette")) {
        const std::size_t p = get_size(j, "palette");
        if (p < c.palette) throw InvalidArgument("palette smaller than the largest color");
        c.palette = p;
    }
    return c;
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidArgument("probabilities must be integers or \"num/den\" strings, got " + j.dump());
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(format_rational(r));
    return a;
}

Json to_json(const Spectrum& s) {
    Json distinct = Json::array();
    for (const auto& d : s.distinct()) distinct.push_back({{"value", d.value}, {"multiplicity", d.multiplicity}});
    return {{"eigenvalues", s.eigenvalues}, {"distinct", distinct}};
}

Json to_json(const GershgorinIntervals& g) {
    Json iv = Json::array();
    for (const auto& i : g.intervals) iv.push_back({i.lo, i.hi});
    const char* mode = g.mode == GershgorinMode::scalar ? "scalar" : g.mode == GershgorinMode::block ? "block" : "block-nested";
    const auto env = g.envelope();
    return {{"intervals", iv}, {"mode", mode}, {"block_size", g.block_size}, {"envelope", {env.lo, env.hi}}};
}

Json to_json(const BoundReport& b) {
    Json j{{"name", b.name}, {"source", b.source}, {"lower", b.lower}, {"upper", b.upper}, {"details", b.details}};
    if (b.exact) j["exact"] = *b.exact;
    return j;
}

Json to_json(const SplitReport& r) {
    return {{"full", r.full.eigenvalues},
            {"gr", r.gr.eigenvalues},
            {"fc", r.fc.eigenvalues},
            {"deviations", r.deviation},
            {"lambda1_sum", r.lambda1_sum},
            {"lambda1_iterative", r.lambda1_iterative},
            {"block_size", r.split.block_size}};
}

Json to_json(const EntropyWindow& w) {
    return {{"lo", w.lo},
            {"hi", w.hi},
            {"alpha_lower", format_rational(w.alpha_lower)},
            {"alpha_min", w.alpha_min.str()},
            {"alpha_max", w.alpha_max.str()},
            {"lo_alphas", alphas_to_json(w.lo_profile)},
            {"hi_alphas", alphas_to_json(w.hi_profile)},
            {"relaxed_lower", w.relaxed_lower},
            {"ordering", w.ordering == AlphaOrdering::monotone ? "monotone" : "scaled"}};
}

Json to_json(const HuffmanCode& h) {
    Json words = Json::object();
    for (const auto& [c, w] : h.codewords) words[std::to_string(c)] = w;
    return {{"codewords", words},
            {"average_length", format_rational(h.average_length)},
            {"average_length_bits", to_double(h.average_length)},
            {"entropy", h.entropy},
            {"warnings", h.warnings}};
}

Json to_json(const ExpansionReport& r) {
    Json bounds{{"complete_upper", r.bounds.complete_upper},
                {"degree", r.bounds.degree},
                {"lambda", r.bounds.lambda},
                {"bound_on_bound", r.bounds.bound_on_bound}};
    if (r.bounds.tanner_lower) bounds["tanner_lower"] = *r.bounds.tanner_lower;
    if (r.bounds.cycle_lower) bounds["cycle_lower"] = *r.bounds.cycle_lower;
    if (r.bounds.cycle_ordering_holds) bounds["cycle_ordering_holds"] = *r.bounds.cycle_ordering_holds;
    Json j{{"subset_size", r.subset_size},
           {"neighborhood_size", r.neighborhood_size},
           {"rate", format_rational(r.rate)},
           {"rate_value", to_double(r.rate)},
           {"adjacent_size", r.adjacent_size},
           {"adjacency_rate", format_rational(r.adjacency_rate)},
           {"family", to_string(r.family)},
           {"regular", r.regular},
           {"bounds", bounds}};
    if (r.spanning_cycle) j["spanning_cycle"] = *r.spanning_cycle;
    return j;
}

namespace {

Json to_json(const SourceRate& s) {
    Json j{{"empirical", s.empirical},
           {"huffman", s.huffman},
           {"coloring_entropy", s.coloring_entropy},
           {"source_entropy", s.source_entropy},
           {"total_bits", s.total_bits}};
    if (s.chromatic_entropy) j["chromatic_entropy"] = *s.chromatic_entropy;
    if (s.fractional_lower) j["fractional_lower"] = *s.fractional_lower;
    if (s.window_lo) j["window"] = {*s.window_lo, *s.window_hi};
    return j;
}

}  // namespace

Json to_json(const RateReport& r) {
    return {{"n", r.n},
            {"samples", r.samples},
            {"seed", r.seed},
            {"source1", to_json(r.first)},
            {"source2", to_json(r.second)},
            {"lossless", r.lossless}};
}

Json to_json(const CodecPlan& plan) {
    std::vector<std::pair<std::pair<ColorId, ColorId>, const DecoderEntry*>> entries;
    const auto p2 = plan.second.coloring.palette;
    for (const auto& [k, e] : plan.decoder) entries.push_back({{k / p2, k % p2}, &e});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Json dec = Json::array();
    for (const auto& [cc, e] : entries) {
        Json out = Json::array();
        for (int o : e->outcomes) out.push_back(plan.spec.labels[static_cast<std::size_t>(o)]);
        dec.push_back({{"colors", {cc.first, cc.second}}, {"outcomes", out}});
    }
    auto source = [](const SourcePlan& s) {
        return Json{{"graph", to_json(s.graph)},
                    {"coloring", to_json(s.coloring)},
                    {"color_pmf", rationals_to_json(s.color_pmf.probs)},
                    {"huffman", to_json(s.code)}};
    };
    return {{"n", plan.n},
            {"strategy", to_string(plan.strategy)},
            {"source1", source(plan.first)},
            {"source2", source(plan.second)},
            {"decoder", dec}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << dump_json(j);
}

}  // namespace chromacode
