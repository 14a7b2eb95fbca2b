#include "reproduce.hpp"

#include "chromacode/char_graph.hpp"
#include "chromacode/codec.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"
#include "chromacode/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace chromacode::cli {

using nlohmann::json;

namespace {

GoldenRow number_row(const std::string& c, const std::string& q, double expected, double computed, double tol) {
    return {c, q, expected, computed, tol, std::abs(expected - computed) <= tol};
}

GoldenRow integer_row(const std::string& c, const std::string& q, long long expected, long long computed) {
    return {c, q, expected, computed, 0.0, expected == computed};
}

GoldenRow vector_row(const std::string& c, const std::string& q, std::vector<double> expected,
                     std::vector<double> computed, double tol) {
    bool ok = expected.size() == computed.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = std::abs(expected[i] - computed[i]) <= tol;
    return {c, q, expected, computed, tol, ok};
}

std::vector<double> distinct_values(const Spectrum& s, double tol = 1e-6) {
    std::vector<double> out;
    for (const auto& d : s.distinct(tol)) out.push_back(d.value);
    return out;
}

Graph example5_graph() { return make_custom(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

std::vector<Rational> listed_pmf(const std::vector<std::pair<long long, int>>& parts, long long den) {
    std::vector<Rational> p;
    for (const auto& [num, count] : parts)
        for (int i = 0; i < count; ++i) p.emplace_back(num, den);
    return p;
}

// Average length of codeword lengths paired with the pmf entries in the order given.
double listed_average(const std::vector<Rational>& pmf, const std::vector<std::size_t>& lengths) {
    Rational avg = 0;
    for (std::size_t i = 0; i < pmf.size(); ++i) avg += pmf[i] * static_cast<long long>(lengths[i]);
    return to_double(avg);
}

std::vector<GoldenRow> example1(double tol) {
    const std::string c = "example1";
    std::vector<GoldenRow> rows;
    const auto plan = build_codec(example1_spec(), example1_pmf(), 1, ColoringStrategy::exact);
    rows.push_back(integer_row(c, "chi(G_X1)", 2, static_cast<long long>(plan.first.coloring.palette)));
    rows.push_back(integer_row(c, "chi(G_X2)", 2, static_cast<long long>(plan.second.coloring.palette)));
    const auto& c1 = plan.first.coloring.colors;
    const auto& c2 = plan.second.coloring.colors;
    const std::vector<std::pair<std::string, ColorId>> names1{{"B", c1[0]}, {"O", c1[1]}};
    const std::vector<std::pair<std::string, ColorId>> names2{{"R", c2[1]}, {"Y", c2[0]}};
    json expected{{"B,R", 1}, {"B,Y", 0}, {"O,R", 0}, {"O,Y", 1}};
    json computed = json::object();
    for (const auto& [n1, k1] : names1)
        for (const auto& [n2, k2] : names2) computed[n1 + "," + n2] = std::stoi(plan.spec.labels[static_cast<std::size_t>(decode_colors(plan, k1, k2).front())]);
    rows.push_back({c, "decoder table", expected, computed, 0.0, expected == computed});
    rows.push_back(number_row(c, "rate source 1 (bits/symbol)", 1.0, to_double(plan.first.code.average_length), tol));
    rows.push_back(number_row(c, "rate source 2 (bits/symbol)", 1.0, to_double(plan.second.code.average_length), tol));
    return rows;
}

std::vector<GoldenRow> example2(double tol) {
    const std::string c = "example2";
    std::vector<GoldenRow> rows;
    const Graph c5 = make_cycle(5);
    const auto h1 = chromatic_entropy_bruteforce(c5, uniform_pmf(5));
    rows.push_back(number_row(c, "H_chi(C5)", 1.52, h1.bits, tol));
    rows.push_back(vector_row(c, "min-entropy color pmf of C5", {0.2, 0.4, 0.4},
                              [&] {
                                  std::vector<double> p;
                                  for (const auto& r : h1.pmf.probs) p.push_back(to_double(r));
                                  std::sort(p.begin(), p.end());
                                  return p;
                              }(),
                              1e-12));
    const auto listed = listed_pmf({{4, 5}, {2, 2}, {1, 1}}, 25);
    rows.push_back(number_row(c, "H(listed C5^2 color pmf)/2", 1.37, entropy_bits(listed) / 2.0, tol));
    const Graph c5sq = or_power(c5, 2);
    const auto h2 = chromatic_entropy_bruteforce(c5sq, uniform_pmf(25), 25);
    rows.push_back(number_row(c, "H_chi(C5^2)/2", 1.37, h2.bits / 2.0, tol));
    rows.push_back(integer_row(c, "colors of the minimum-entropy C5^2 coloring", 8,
                               static_cast<long long>(h2.witness.palette)));
    return rows;
}

std::vector<GoldenRow> example3(double tol) {
    const std::string c = "example3";
    std::vector<GoldenRow> rows;
    const auto w = odd_cycle_entropy_upper_bound(2, 3);
    rows.push_back(integer_row(c, "alpha_0", 1, w.lo_profile.alphas.front().convert_to<long long>()));
    rows.push_back({c, "alpha_3 real lower bound", "200/17", format_rational(w.alpha_lower), 0.0,
                    w.alpha_lower == Rational(200, 17)});
    rows.push_back(integer_row(c, "alpha_3 min", 12, w.alpha_min.convert_to<long long>()));
    rows.push_back(integer_row(c, "alpha_3 max", 15, w.alpha_max.convert_to<long long>()));
    rows.push_back(number_row(c, "window lo (bits/symbol)", 1.37, w.lo, tol));
    rows.push_back(number_row(c, "window hi (bits/symbol)", 1.41, w.hi, tol));
    return rows;
}

std::vector<GoldenRow> example4(double tol) {
    const std::string c = "example4";
    std::vector<GoldenRow> rows;
    AlphaProfile p;
    p.alphas = {1, 2, 4, 13};
    p.mis_sizes = {1, 2, 4, 8};
    rows.push_back({c, "profile (1,2,4,13) feasible", true, is_feasible_profile(p, 125, AlphaOrdering::monotone), 0.0,
                    is_feasible_profile(p, 125, AlphaOrdering::monotone)});
    long long colors = 0;
    for (const auto& a : p.alphas) colors += a.convert_to<long long>();
    rows.push_back(integer_row(c, "colors of the C5^3 profile", 20, colors));
    rows.push_back(integer_row(c, "chi(C5^3)", 20, static_cast<long long>(odd_cycle_recursive_count(3))));

    const auto c5pmf = listed_pmf({{1, 1}, {2, 2}}, 5);
    const auto h1 = huffman_code(ColoringPMF{c5pmf});
    // Y (1/5) -> 1, R (2/5) -> 00, B (2/5) -> 01.
    rows.push_back(number_row(c, "C5 listed code length vs Huffman", listed_average(c5pmf, {1, 2, 2}),
                              to_double(h1.average_length), tol));
    const auto c5sq = listed_pmf({{4, 5}, {2, 2}, {1, 1}}, 25);
    const auto h2 = huffman_code(ColoringPMF{c5sq});
    // c1..c8 in the order of the listed pmf.
    rows.push_back(number_row(c, "C5^2 listed code length vs Huffman", listed_average(c5sq, {2, 3, 3, 3, 3, 3, 4, 4}),
                              to_double(h2.average_length), tol));
    return rows;
}

std::vector<GoldenRow> example5(double tol) {
    const std::string c = "example5";
    std::vector<GoldenRow> rows;
    const Graph g = example5_graph();
    const auto s = graph_spectrum(g);
    rows.push_back(vector_row(c, "eigenvalues of A_f1", {2.4812, 0.6889, 0.0, -1.1701, -2.0}, s.eigenvalues, tol));

    const auto gct = gershgorin(adjacency_matrix(g));
    std::vector<std::pair<double, double>> iv;
    for (const auto& i : gct.intervals) iv.emplace_back(i.lo, i.hi);
    std::sort(iv.begin(), iv.end(), std::greater<>());
    const std::vector<std::pair<double, double>> want{{-2, 2}, {-2, 2}, {-2, 2}, {-3, 3}, {-3, 3}};
    rows.push_back({c, "Gershgorin intervals", json(want), json(iv), 0.0, iv == want});

    const auto window = chromatic_bounds_spectral(BoundVariant::lambda1_window, g, 2);
    rows.push_back(vector_row(c, "lambda_1(A^2) degree window", {12, 18},
                              {window.details.at("window_lo"), window.details.at("window_hi")}, tol));
    rows.push_back(vector_row(c, "lambda_1(A^2) refined window", {12, 15},
                              {window.details.at("window_lo"), window.details.at("window_hi_refined")}, tol));
    const Graph g2 = or_power(g, 2);
    const double l1 = graph_spectrum(g2).largest();
    rows.push_back({c, "solver lambda_1(A^2) inside [12, 15]", true, l1, 0.0, l1 >= 12.0 - 1e-9 && l1 <= 15.0 + 1e-9});
    const auto block = gershgorin(adjacency_matrix(g2), GershgorinMode::block_nested, 5).envelope();
    rows.push_back(vector_row(c, "block Gershgorin envelope of A^2", {-18, 18}, {block.lo, block.hi}, tol));
    return rows;
}

std::vector<GoldenRow> chromatic(double) {
    const std::string c = "chromatic";
    std::vector<GoldenRow> rows;
    const std::vector<long long> want{3, 8, 20, 50, 125, 313};
    for (std::size_t n = 1; n <= 6; ++n) {
        rows.push_back(integer_row(c, "chi(C5^" + std::to_string(n) + ") recursion", want[n - 1],
                                   static_cast<long long>(odd_cycle_recursive_count(n))));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        auto pc = odd_cycle_power_coloring(5, n);
        rows.push_back(integer_row(c, "chi(C5^" + std::to_string(n) + ") constructed coloring", want[n - 1],
                                   static_cast<long long>(pc.coloring ? pc.coloring->palette : pc.count)));
    }
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto exact = exact_chromatic_number(or_power(make_cycle(5), n));
        rows.push_back(integer_row(c, "chi(C5^" + std::to_string(n) + ") exact solver", want[n - 1],
                                   static_cast<long long>(exact.chi)));
    }
    return rows;
}

std::vector<GoldenRow> spectra(double tol) {
    const std::string c = "spectra";
    std::vector<GoldenRow> rows;
    const Graph c5 = make_cycle(5);
    rows.push_back(vector_row(c, "distinct eigenvalues of C5", {-1.618, 0.618, 2}, distinct_values(graph_spectrum(c5)), tol));
    const Graph c52 = or_power(c5, 2);
    const auto s2 = graph_spectrum(c52);
    rows.push_back(vector_row(c, "distinct eigenvalues of C5^2", {-6.09, -1.61803, 0.61803, 5.09016, 12},
                              distinct_values(s2), tol));
    const auto b = smallest_eig_lower_bounds(25, c52.edge_count(), degrees(c52));
    rows.push_back(number_row(c, "Brigham bound on lambda_25(C5^2)", -60, b.brigham, tol));
    rows.push_back(number_row(c, "Hong bound on lambda_25(C5^2)", -12.748, b.hong, tol));
    for (auto [v, n] : {std::pair<std::size_t, std::size_t>{4, 2}, {4, 3}, {5, 2}}) {
        const double closed = cycle_power_largest_eig(v, n);
        const double solver = graph_spectrum(or_power(make_cycle(v), n)).largest();
        rows.push_back(number_row(c, "lambda_1(C" + std::to_string(v) + "^" + std::to_string(n) + ") closed form",
                                  closed, solver, 1e-6));
    }
    return rows;
}

}  // namespace

std::vector<std::string> golden_cases() {
    return {"example1", "example2", "example3", "example4", "example5", "chromatic", "spectra"};
}

std::vector<GoldenRow> reproduce_case(const std::string& name, double tol) {
    if (name == "all") {
        std::vector<GoldenRow> all;
        for (const auto& c : golden_cases()) {
            auto rows = reproduce_case(c, tol);
            all.insert(all.end(), rows.begin(), rows.end());
        }
        return all;
    }
    if (name == "example1") return example1(tol);
    if (name == "example2") return example2(tol);
    if (name == "example3") return example3(tol);
    if (name == "example4") return example4(tol);
    if (name == "example5") return example5(tol);
    if (name == "chromatic") return chromatic(tol);
    if (name == "spectra") return spectra(tol);
    throw InvalidArgument("unknown case '" + name + "'");
}

json to_json(const std::vector<GoldenRow>& rows) {
    json arr = json::array();
    std::size_t passed = 0;
    for (const auto& r : rows) {
        arr.push_back({{"case", r.case_name},
                       {"quantity", r.quantity},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
        passed += r.pass ? 1 : 0;
    }
    return {{"rows", arr}, {"passed", passed}, {"failed", rows.size() - passed}};
}

std::string to_text(const std::vector<GoldenRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(10) << r.case_name << std::setw(46)
           << r.quantity << " expected " << r.expected.dump() << "  computed " << r.computed.dump() << "  tol "
           << r.tolerance << "\n";
    }
    return os.str();
}

}  // namespace chromacode::cli
