#include "cli.hpp"

#include "manifest.hpp"
#include "reproduce.hpp"

#include "chromacode/char_graph.hpp"
#include "chromacode/codec.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/expansion.hpp"
#include "chromacode/json_io.hpp"
#include "chromacode/or_product.hpp"
#include "chromacode/spectral.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace chromacode::cli {

namespace {

struct GraphInput {
    std::string file;
    std::string kind;
    std::size_t size = 0;
    std::size_t power = 1;
};

struct Options {
    double tol = 5e-3;
    std::string out_path;
    std::string manifest_path;
    std::string replay_path;
    std::optional<std::size_t> guard;

    GraphInput graph;
    std::string spec_file;
    std::string pmf = "uniform";
    std::string source = "both";
    std::string coloring1, coloring2;
    bool degrees = false;

    std::string scheme = "exact";
    std::size_t b = 1;
    long long timeout_ms = 60000;
    std::size_t exact_guard = 64;

    std::string bound = "brute";
    std::string ordering = "monotone";

    std::string op = "eig";
    std::string mode = "scalar";
    std::size_t block_size = 0;
    std::string variant;
    bool with_exact = false;

    std::string subset;
    std::size_t sample = 0;
    std::uint64_t seed = 0;

    std::size_t n = 1;
    std::size_t samples = 10000;
    std::string strategy = "auto";

    std::string case_name = "all";
    std::string format = "json";
};

void add_graph_options(CLI::App* sub, Options& o, bool with_power) {
    sub->add_option("--graph", o.graph.file, "Graph JSON file");
    sub->add_option("--kind", o.graph.kind, "Built-in family: cycle, complete, path, prism");
    sub->add_option("--size", o.graph.size, "Vertex count for --kind");
    if (with_power) sub->add_option("--power", o.graph.power, "OR power n")->check(CLI::PositiveNumber);
}

Graph load_graph(const GraphInput& in) {
    if (!in.file.empty()) return graph_from_json(read_json_file(in.file));
    if (!in.kind.empty()) return graph_from_json(Json{{"kind", in.kind}, {"size", in.size}});
    throw InvalidArgument("a graph is required: pass --graph FILE or --kind NAME --size V");
}

std::vector<Rational> parse_vertex_pmf(const std::string& text, std::size_t v) {
    if (text == "uniform") return uniform_pmf(v);
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != v) throw InvalidArgument("vertex distribution has " + std::to_string(out.size()) + " entries, expected " + std::to_string(v));
    if (sum(out) != 1) throw InvalidArgument("vertex distribution does not sum to 1");
    return out;
}

std::vector<Rational> block_pmf(const std::vector<Rational>& base, std::size_t n) {
    TupleIndex idx(base.size(), n);
    std::vector<Rational> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational p = 1;
        for (auto x : idx.decode(i)) p *= base[x];
        out[i] = p;
    }
    return out;
}

std::vector<VertexId> parse_subset(const std::string& text) {
    std::vector<VertexId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InvalidArgument("subset entry '" + item + "' is not a vertex id");
        }
    }
    return out;
}

JointPMF load_pmf(const std::string& pmf, const FunctionSpec& spec) {
    if (pmf == "uniform") return uniform_joint_pmf(spec.x1, spec.x2);
    return joint_pmf_from_json(read_json_file(pmf), spec.x1, spec.x2);
}

Json alphas_json(const AlphaProfile& p) {
    Json a = Json::array();
    for (const auto& x : p.alphas) a.push_back(x.str());
    return a;
}

// ---- subcommands ----------------------------------------------------------

Json cmd_graph(const Options& o) {
    const Graph g = load_graph(o.graph);
    return {{"graph", to_json(g)},
            {"degrees", degrees(g)},
            {"edge_count", g.edge_count()},
            {"regular", is_regular(g)},
            {"connected", is_connected(g)},
            {"bipartite", bipartition(g).has_value()}};
}

Json cmd_chargraph(const Options& o) {
    const auto spec = function_spec_from_json(read_json_file(o.spec_file));
    const auto pmf = load_pmf(o.pmf, spec);
    Json j = Json::object();
    if (o.source == "1" || o.source == "both") j["source1"] = to_json(build_characteristic_graph(spec, pmf, Source::first));
    if (o.source == "2" || o.source == "both") j["source2"] = to_json(build_characteristic_graph(spec, pmf, Source::second));
    if (!o.coloring1.empty() || !o.coloring2.empty()) {
        if (o.coloring1.empty() || o.coloring2.empty()) throw InvalidArgument("pass both --coloring1 and --coloring2");
        const auto c1 = coloring_from_json(read_json_file(o.coloring1));
        const auto c2 = coloring_from_json(read_json_file(o.coloring2));
        const auto conflict = find_lookup_conflict(spec, pmf, c1, c2);
        j["lookup_consistent"] = !conflict.has_value();
        if (conflict) j["conflict"] = {conflict->x1a, conflict->x2a, conflict->x1b, conflict->x2b};
        try {
            j["sufficient"] = verify_coloring_sufficiency(spec, pmf, c1, c2);
        } catch (const InvalidArgument& e) {
            j["sufficient"] = false;
            j["reason"] = e.what();
        }
    }
    return j;
}

Json cmd_power(const Options& o, std::size_t guard) {
    const Graph g = load_graph(o.graph);
    const Graph gn = or_power(g, o.graph.power, guard);
    Json j = to_json(gn);
    if (o.degrees) {
        const auto measured = degrees(gn);
        const auto base = degrees(g);
        bool match = true;
        TupleIndex idx(g.vertex_count(), o.graph.power);
        for (std::size_t i = 0; i < measured.size(); ++i) match = match && measured[i] == tuple_degree(base, idx.decode(i));
        j["degrees"] = measured;
        j["degree_formula_matches"] = match;
    }
    return j;
}

Json cmd_color(const Options& o, std::size_t guard) {
    const Graph g = load_graph(o.graph);
    const std::size_t n = o.graph.power;
    Json j{{"scheme", o.scheme}, {"power", n}};
    if (o.scheme == "odd-cycle") {
        auto order = cycle_order(g);
        if (!order || g.vertex_count() % 2 == 0) throw UnsupportedInput("odd-cycle scheme needs an odd cycle");
        const auto pc = odd_cycle_power_coloring(g.vertex_count(), n, guard);
        j["chi"] = pc.count;
        j["materialized"] = pc.materialized;
        if (pc.coloring) {
            const Graph gn = or_power(g, n, guard);
            const auto c = color_power(g, gn, n, ColoringStrategy::odd_cycle);
            j["coloring"] = to_json(c);
            j["valid"] = is_valid_coloring(gn, c);
        }
        return j;
    }
    if (o.scheme == "even-cycle") {
        const auto c = bipartite_power_coloring(g, n);
        j["chi"] = c.palette;
        if (g.vertex_count() > 0 && checked_power(g.vertex_count(), n, guard) > 0) {
            const Graph gn = or_power(g, n, guard);
            j["valid"] = is_valid_coloring(gn, c);
        }
        j["coloring"] = to_json(c);
        return j;
    }
    const Graph gn = or_power(g, n, guard);
    if (o.scheme == "exact") {
        ExactOptions opts;
        opts.guard = o.exact_guard;
        opts.timeout = std::chrono::milliseconds(o.timeout_ms);
        const auto r = exact_chromatic_number(gn, opts);
        j["chi"] = r.chi;
        j["clique_lower_bound"] = r.clique_lower_bound;
        j["nodes"] = r.nodes;
        j["coloring"] = to_json(r.witness);
        j["valid"] = is_valid_coloring(gn, r.witness);
        return j;
    }
    if (o.scheme == "greedy") {
        const auto c = greedy_coloring(gn);
        j["chi"] = c.palette;
        j["coloring"] = to_json(c);
        j["valid"] = is_valid_coloring(gn, c);
        return j;
    }
    if (o.scheme == "fractional") {
        if (o.b == 0) throw InvalidArgument("--b must be at least 1");
        const std::size_t a = b_fold_chromatic_number(gn, o.b, o.exact_guard, std::chrono::milliseconds(o.timeout_ms));
        const auto fc = find_b_fold_coloring(gn, a, o.b, std::chrono::milliseconds(o.timeout_ms));
        j["b"] = o.b;
        j["a"] = a;
        j["chi"] = a;
        j["ratio"] = format_rational(Rational(a, o.b));
        if (fc) {
            j["sets"] = fc->sets;
            j["valid"] = is_valid_fractional_coloring(gn, *fc);
        }
        return j;
    }
    throw InvalidArgument("unknown scheme '" + o.scheme + "'");
}

AlphaOrdering parse_ordering(const std::string& s) {
    if (s == "monotone") return AlphaOrdering::monotone;
    if (s == "scaled") return AlphaOrdering::scaled;
    throw InvalidArgument("unknown ordering '" + s + "'");
}

Json cmd_entropy(const Options& o, std::size_t guard) {
    const Graph g = load_graph(o.graph);
    const std::size_t n = o.graph.power;
    const double dn = static_cast<double>(n);
    Json j{{"bound", o.bound}, {"power", n}};
    if (o.bound == "brute") {
        const Graph gn = or_power(g, n, guard);
        const auto pmf = block_pmf(parse_vertex_pmf(o.pmf, g.vertex_count()), n);
        const auto r = chromatic_entropy_bruteforce(gn, pmf, std::min<std::size_t>(guard, 64));
        j["lo"] = r.bits / dn;
        j["hi"] = r.bits / dn;
        j["total_bits"] = r.bits;
        j["pmf"] = rationals_to_json(r.pmf.probs);
        j["alphas"] = nullptr;
        j["coloring"] = to_json(r.witness);
        return j;
    }
    if (o.bound == "odd-cycle" || o.bound == "general") {
        EntropyWindow w;
        if (o.bound == "odd-cycle") {
            if (!cycle_order(g) || g.vertex_count() % 2 == 0) throw UnsupportedInput("odd-cycle bound needs an odd cycle");
            w = odd_cycle_entropy_upper_bound((g.vertex_count() - 1) / 2, n, parse_ordering(o.ordering));
        } else {
            w = general_entropy_upper_bound(g, n, parse_ordering(o.ordering));
        }
        const BigInt total = [&] {
            BigInt t = 1;
            for (std::size_t i = 0; i < n; ++i) t *= g.vertex_count();
            return t;
        }();
        j["lo"] = w.lo;
        j["hi"] = w.hi;
        j["alphas"] = alphas_json(w.lo_profile);
        j["alphas_hi"] = alphas_json(w.hi_profile);
        j["pmf"] = rationals_to_json(profile_pmf(w.lo_profile, total));
        j["window"] = to_json(w);
        return j;
    }
    if (o.bound == "fractional") {
        const auto pmf = parse_vertex_pmf(o.pmf, g.vertex_count());
        if (!cycle_order(g)) throw UnsupportedInput("fractional bound needs an odd cycle");
        const double v = fractional_entropy_lower_bound(g.vertex_count(), &pmf);
        j["lo"] = v;
        j["hi"] = v;
        j["alphas"] = nullptr;
        j["pmf"] = nullptr;
        return j;
    }
    throw InvalidArgument("unknown bound '" + o.bound + "'");
}

GershgorinMode parse_mode(const std::string& s) {
    if (s == "scalar") return GershgorinMode::scalar;
    if (s == "block") return GershgorinMode::block;
    if (s == "block-nested") return GershgorinMode::block_nested;
    throw InvalidArgument("unknown Gershgorin mode '" + s + "'");
}

Json cmd_spectral(const Options& o, std::size_t guard) {
    const Graph g = load_graph(o.graph);
    const std::size_t n = o.graph.power;
    const Graph gn = or_power(g, n, guard);
    Json j{{"op", o.op}, {"power", n}};
    if (o.op == "eig") {
        const auto d = symmetric_eigen(adjacency_matrix(gn), 1e-12, 1e-9, guard);
        j["eigenvalues"] = d.spectrum.eigenvalues;
        j["distinct"] = to_json(d.spectrum)["distinct"];
        j["max_residual"] = d.max_residual;
        j["sweeps"] = d.sweeps;
        return j;
    }
    if (o.op == "gct") {
        const auto mode = parse_mode(o.mode);
        std::size_t bs = o.block_size;
        if (bs == 0) bs = mode == GershgorinMode::scalar ? 1 : gn.vertex_count() / g.vertex_count();
        const auto gi = gershgorin(adjacency_matrix(gn), mode, bs);
        j["intervals"] = to_json(gi)["intervals"];
        j["envelope"] = to_json(gi)["envelope"];
        j["mode"] = o.mode;
        j["block_size"] = bs;
        return j;
    }
    if (o.op == "split") {
        const auto r = split_report(gn, &g);
        j["split"] = to_json(r);
        j["deviations"] = r.deviation;
        return j;
    }
    if (o.op == "bounds") {
        std::vector<BoundVariant> variants;
        if (!o.variant.empty()) {
            variants.push_back(bound_variant_from_string(o.variant));
        } else {
            variants = {BoundVariant::hoffman_direct, BoundVariant::cycle_power, BoundVariant::degree,
                        BoundVariant::general, BoundVariant::lambda1_window, BoundVariant::gct_split};
        }
        std::optional<std::size_t> exact;
        if (o.with_exact) exact = exact_chromatic_number(gn).chi;
        Json arr = Json::array();
        for (auto v : variants) {
            try {
                auto b = chromatic_bounds_spectral(v, g, n, guard);
                if (exact) b.exact = static_cast<double>(*exact);
                arr.push_back(to_json(b));
            } catch (const InvalidArgument& e) {
                if (!o.variant.empty()) throw;
                arr.push_back({{"name", to_string(v)}, {"skipped", e.what()}});
            }
        }
        j["bounds"] = arr;
        const auto se = smallest_eig_lower_bounds(gn.vertex_count(), gn.edge_count(), degrees(gn));
        j["smallest_eigenvalue_bounds"] = {{"brigham", se.brigham}, {"hong", se.hong}, {"das", se.das}};
        return j;
    }
    throw InvalidArgument("unknown spectral op '" + o.op + "'");
}

Json cmd_expansion(const Options& o, std::size_t guard) {
    const Graph g = load_graph(o.graph);
    const std::size_t n = o.graph.power;
    const std::size_t total = checked_power(g.vertex_count(), n, guard);
    VertexSet y;
    if (!o.subset.empty() && o.sample > 0) throw InvalidArgument("pass either --subset or --sample");
    if (!o.subset.empty()) {
        const auto m = parse_subset(o.subset);
        for (auto v : m)
            if (v >= total) throw InvalidArgument("subset vertex " + std::to_string(v) + " out of range");
        y = make_vertex_set(total, m);
    } else if (o.sample > 0) {
        y = sample_subset(total, o.sample, o.seed);
    } else {
        throw InvalidArgument("expansion needs --subset or --sample");
    }
    Json j = to_json(expansion_report(g, n, y, guard));
    j["subset"] = members(y);
    j["power"] = n;
    return j;
}

Json cmd_simulate(const Options& o, std::size_t guard) {
    const auto spec = function_spec_from_json(read_json_file(o.spec_file));
    const auto pmf = load_pmf(o.pmf, spec);
    const auto plan = build_codec(spec, pmf, o.n, coloring_strategy_from_string(o.strategy), guard);
    const auto rt = round_trip(plan);
    Json j = to_json(simulate(plan, o.samples, o.seed));
    j["strategy"] = o.strategy;
    j["round_trip"] = {{"pairs_checked", rt.pairs_checked}, {"failures", rt.failures}};
    j["palettes"] = {plan.first.coloring.palette, plan.second.coloring.palette};
    return j;
}

std::string rows_csv(const std::vector<GoldenRow>& rows) {
    std::ostringstream os;
    os << "case,quantity,expected,computed,tolerance,pass\n";
    auto q = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    };
    for (const auto& r : rows) {
        os << q(r.case_name) << ',' << q(r.quantity) << ',' << q(r.expected.dump()) << ',' << q(r.computed.dump())
           << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    out << text;
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write '" + o.out_path + "'");
        f << text;
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto m = manifest_from_json(read_json_file(path));
    if (m.tool_version != kToolVersion) {
        err << "manifest was written by version " << m.tool_version << ", this is " << kToolVersion << "\n";
        return kUsage;
    }
    for (const auto& [file, digest] : m.inputs) {
        if (sha256_file(file) != digest) {
            err << "input '" << file << "' changed since the manifest was written\n";
            return kCheckFailed;
        }
    }
    return dispatch(m.args, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Functional compression with characteristic graphs", "chromacode"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.add_option("--tol", o.tol, "Tolerance for published decimal values")->capture_default_str();
    app.add_option("--out", o.out_path, "Also write the output to this file");
    app.add_option("--manifest", o.manifest_path, "Write a run manifest to this file");
    app.add_option("--replay", o.replay_path, "Re-run the command recorded in a manifest");
    app.add_option("--guard", o.guard, "Vertex budget for materialized graphs (overrides CHROMACODE_GUARD)");

    auto* graph = app.add_subcommand("graph", "Describe a graph");
    add_graph_options(graph, o, false);

    auto* chargraph = app.add_subcommand("chargraph", "Characteristic graphs of a function");
    chargraph->add_option("--spec", o.spec_file, "Function JSON")->required();
    chargraph->add_option("--pmf", o.pmf, "Joint distribution JSON or 'uniform'");
    chargraph->add_option("--source", o.source, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    chargraph->add_option("--coloring1", o.coloring1, "Coloring JSON for source 1");
    chargraph->add_option("--coloring2", o.coloring2, "Coloring JSON for source 2");

    auto* power = app.add_subcommand("power", "n-fold OR power");
    add_graph_options(power, o, true);
    power->add_flag("--degrees", o.degrees, "Include degrees and check them against the tuple formula");

    auto* color = app.add_subcommand("color", "Color a graph power");
    add_graph_options(color, o, true);
    color->add_option("--scheme", o.scheme)->check(CLI::IsMember({"exact", "greedy", "even-cycle", "odd-cycle", "fractional"}));
    color->add_option("--b", o.b, "Fold for the fractional scheme");
    color->add_option("--timeout-ms", o.timeout_ms, "Exact solver time limit");
    color->add_option("--exact-guard", o.exact_guard, "Exact solver vertex limit");

    auto* entropy = app.add_subcommand("entropy", "Chromatic entropy and its bounds");
    add_graph_options(entropy, o, true);
    entropy->add_option("--bound", o.bound)->check(CLI::IsMember({"brute", "odd-cycle", "general", "fractional"}));
    entropy->add_option("--ordering", o.ordering)->check(CLI::IsMember({"monotone", "scaled"}));
    entropy->add_option("--pmf", o.pmf, "Vertex distribution as comma-separated rationals or 'uniform'");

    auto* spectral = app.add_subcommand("spectral", "Spectra, Gershgorin intervals and chromatic bounds");
    add_graph_options(spectral, o, true);
    spectral->add_option("--op", o.op)->check(CLI::IsMember({"eig", "gct", "split", "bounds"}));
    spectral->add_option("--mode", o.mode)->check(CLI::IsMember({"scalar", "block", "block-nested"}));
    spectral->add_option("--block-size", o.block_size);
    spectral->add_option("--variant", o.variant);
    spectral->add_flag("--with-exact", o.with_exact, "Attach the exact chromatic number");

    auto* expansion = app.add_subcommand("expansion", "Expansion rate of a vertex subset");
    add_graph_options(expansion, o, true);
    expansion->add_option("--subset", o.subset, "Comma-separated vertex ids of the power");
    expansion->add_option("--sample", o.sample, "Random subset size");
    expansion->add_option("--seed", o.seed);

    auto* sim = app.add_subcommand("simulate", "Run the two-source codec on random blocks");
    sim->add_option("--spec", o.spec_file)->required();
    sim->add_option("--pmf", o.pmf);
    sim->add_option("--n", o.n)->check(CLI::PositiveNumber);
    sim->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    sim->add_option("--seed", o.seed);
    sim->add_option("--strategy", o.strategy)->check(CLI::IsMember({"exact", "greedy", "even-cycle", "odd-cycle", "auto"}));

    auto* repro = app.add_subcommand("reproduce", "Golden table of published values");
    repro->add_option("--case", o.case_name)->check(CLI::IsMember({"all", "example1", "example2", "example3", "example4", "example5", "chromatic", "spectra"}));
    repro->add_option("--format", o.format)->check(CLI::IsMember({"json", "text", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    if (!o.replay_path.empty()) return replay(o.replay_path, out, err);
    if (app.get_subcommands().empty()) {
        err << app.help();
        return kUsage;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    const std::size_t guard = o.guard ? *o.guard : guard_from_env(10000);

    int code = kOk;
    std::string text;
    if (name == "graph") text = dump_json(cmd_graph(o));
    else if (name == "chargraph") text = dump_json(cmd_chargraph(o));
    else if (name == "power") text = dump_json(cmd_power(o, guard));
    else if (name == "color") text = dump_json(cmd_color(o, guard));
    else if (name == "entropy") text = dump_json(cmd_entropy(o, guard));
    else if (name == "spectral") text = dump_json(cmd_spectral(o, guard));
    else if (name == "expansion") text = dump_json(cmd_expansion(o, guard));
    else if (name == "simulate") {
        const Json j = cmd_simulate(o, guard);
        if (!j["lossless"].get<bool>() || j["round_trip"]["failures"].get<std::size_t>() != 0) code = kCheckFailed;
        text = dump_json(j);
    } else if (name == "reproduce") {
        const auto rows = reproduce_case(o.case_name, o.tol);
        if (o.format == "text") text = to_text(rows);
        else if (o.format == "csv") text = rows_csv(rows);
        else text = dump_json(to_json(rows));
        for (const auto& r : rows)
            if (!r.pass) code = kCheckFailed;
    }
    emit(text, o, out);

    if (!o.manifest_path.empty()) {
        RunManifest m;
        m.subcommand = name;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--manifest") {
                ++i;
                continue;
            }
            if (args[i].rfind("--manifest=", 0) == 0) continue;
            m.args.push_back(args[i]);
        }
        for (const auto* f : {&o.graph.file, &o.spec_file, &o.pmf, &o.coloring1, &o.coloring2}) {
            if (!f->empty() && std::filesystem::is_regular_file(*f)) m.inputs[*f] = sha256_file(*f);
        }
        if (name == "simulate" || (name == "expansion" && o.sample > 0)) m.seed = o.seed;
        if (!o.out_path.empty()) m.outputs.push_back(o.out_path);
        write_json_file(o.manifest_path, to_json(m));
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const GuardExceeded& e) {
        out << dump_json(Json{{"error", "guard"}, {"reason", e.reason()}, {"message", e.what()}});
        return kGuard;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AmbiguityError& e) {
        err << "ambiguity: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const UnsupportedInput& e) {
        err << "unsupported input: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace chromacode::cli
