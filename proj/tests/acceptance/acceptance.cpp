// Acceptance suite: one PASS/FAIL line per criterion, with the failing checks listed below it.

#include "chromacode/char_graph.hpp"
#include "chromacode/codec.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/errors.hpp"
#include "chromacode/expansion.hpp"
#include "chromacode/json_io.hpp"
#include "chromacode/or_product.hpp"
#include "chromacode/spectral.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace chromacode;

namespace {

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    void near(double computed, double expected, double tol, const std::string& what) {
        std::ostringstream os;
        os.precision(10);
        os << what << ": computed " << computed << ", expected " << expected << " +/- " << tol;
        check(std::abs(computed - expected) <= tol, os.str());
    }
    void equal(long long computed, long long expected, const std::string& what) {
        check(computed == expected,
              what + ": computed " + std::to_string(computed) + ", expected " + std::to_string(expected));
    }
    void note(const std::string& line) { notes_.push_back(line); }

    bool passed() const { return failures_.empty(); }

    void print(std::ostream& os) const {
        os << (passed() ? "PASS" : "FAIL") << "  criterion " << id_ << ": " << title_ << " (" << checks_ - failures_.size()
           << "/" << checks_ << " checks)\n";
        for (const auto& f : failures_) os << "        failed: " << f << "\n";
        for (const auto& n : notes_) os << "        note: " << n << "\n";
    }

private:
    int id_;
    std::string title_;
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> distinct_values(const Spectrum& s) {
    std::vector<double> out;
    for (const auto& d : s.distinct()) out.push_back(d.value);
    return out;
}

void near_all(Criterion& c, const std::vector<double>& computed, const std::vector<double>& expected, double tol,
              const std::string& what) {
    if (computed.size() != expected.size()) {
        c.check(false, what + ": " + std::to_string(computed.size()) + " values, expected " +
                           std::to_string(expected.size()));
        return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        c.near(computed[i], expected[i], tol, what + "[" + std::to_string(i) + "]");
}

Graph example5_graph() { return make_custom(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

Criterion chromatic_sequence() {
    Criterion c(1, "chromatic numbers of C5^n for n = 1..6");
    const std::vector<long long> want{3, 8, 20, 50, 125, 313};
    for (std::size_t n = 1; n <= 6; ++n)
        c.equal(static_cast<long long>(odd_cycle_recursive_count(n)), want[n - 1], "recursion n=" + std::to_string(n));
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        ExactOptions o;
        o.timeout = std::chrono::milliseconds(60000);
        const auto r = exact_chromatic_number(or_power(make_cycle(5), n), o);
        const double s = seconds_since(t0);
        c.equal(static_cast<long long>(r.chi), want[n - 1], "exact solver n=" + std::to_string(n));
        c.check(s <= 60.0, "exact solver n=" + std::to_string(n) + " within 60 s");
    }
    return c;
}

Criterion even_cycles() {
    Criterion c(2, "even-cycle power colorings");
    struct Case {
        std::size_t k, n;
        long long colors;
    };
    for (const Case& x : {Case{2, 2, 4}, Case{2, 3, 8}, Case{3, 2, 4}}) {
        const auto pc = even_cycle_power_coloring(x.k, x.n);
        const std::string name = "C" + std::to_string(2 * x.k) + "^" + std::to_string(x.n);
        c.check(pc.coloring.has_value(), name + " materialized");
        if (!pc.coloring) continue;
        c.equal(static_cast<long long>(pc.coloring->palette), x.colors, name + " colors");
        c.check(is_valid_coloring(pc.power, *pc.coloring), name + " validity");
        c.check(oracle::proper(oracle::or_power_matrix(make_cycle(2 * x.k), x.n),
                               std::vector<int>(pc.coloring->colors.begin(), pc.coloring->colors.end())),
                name + " validity against the brute-force power");
    }
    c.equal(static_cast<long long>(exact_chromatic_number(or_power(make_cycle(4), 2)).chi), 4, "exact chi(C4^2)");
    return c;
}

Criterion entropy_values() {
    Criterion c(3, "entropy values");
    const double h1 = chromatic_entropy_bruteforce(make_cycle(5), uniform_pmf(5)).bits;
    c.near(h1, 1.5219, 5e-3, "chromatic entropy of C5");

    std::vector<Rational> listed;
    for (int i = 0; i < 5; ++i) listed.emplace_back(4, 25);
    for (int i = 0; i < 2; ++i) listed.emplace_back(2, 25);
    listed.emplace_back(1, 25);
    c.near(entropy_bits(listed) / 2.0, 1.37, 5e-3, "listed C5^2 coloring, per-symbol entropy");
    const double h2 = chromatic_entropy_bruteforce(or_power(make_cycle(5), 2), uniform_pmf(25), 25).bits / 2.0;
    c.near(h2, 1.37, 5e-3, "minimum over all colorings of C5^2, per-symbol entropy");

    const auto w = odd_cycle_entropy_upper_bound(2, 3);
    c.equal(w.lo_profile.alphas.front().convert_to<long long>(), 1, "alpha_0");
    c.equal(w.alpha_min.convert_to<long long>(), 12, "alpha_3 lower end");
    c.equal(w.alpha_max.convert_to<long long>(), 15, "alpha_3 upper end");
    c.near(w.lo, 1.37, 5e-3, "window lower end");
    c.near(w.hi, 1.41, 5e-3, "window upper end");
    return c;
}

Criterion fractional() {
    Criterion c(4, "fractional lower bound and b-fold colorings of C5");
    const double lb = fractional_entropy_lower_bound(5);
    c.near(lb, 1.3219, 1e-4, "log2(5/2)");
    c.near(lb, std::log2(2.5), 1e-6, "log2(5/2) exact");
    c.check(lb <= chromatic_entropy_bruteforce(make_cycle(5), uniform_pmf(5)).bits, "bound below brute-force entropy");
    for (std::size_t b = 1; b <= 4; ++b) {
        const auto fc = find_b_fold_coloring(make_cycle(5), 2 * b + 1, b);
        c.check(fc.has_value() && is_valid_fractional_coloring(make_cycle(5), *fc),
                std::to_string(2 * b + 1) + ":" + std::to_string(b) + " coloring of C5 exists");
        const std::size_t chi_b = b_fold_chromatic_number(make_cycle(5), b);
        c.equal(static_cast<long long>(chi_b), static_cast<long long>(2 * b + 1),
                "chi_" + std::to_string(b) + "(C5)");
        c.check(oracle::fold_colorable(make_cycle(5), chi_b, b) && !oracle::fold_colorable(make_cycle(5), chi_b - 1, b),
                "chi_" + std::to_string(b) + "(C5) confirmed by subset enumeration");
    }
    return c;
}

Criterion spectra() {
    Criterion c(5, "spectra of cycle powers");
    near_all(c, distinct_values(graph_spectrum(make_cycle(5))), {-1.618, 0.618, 2}, 1e-3, "distinct eigenvalues of C5");
    const Graph c52 = or_power(make_cycle(5), 2);
    near_all(c, distinct_values(graph_spectrum(c52)), {-6.09, -1.61803, 0.61803, 5.09016, 12}, 1e-3,
             "distinct eigenvalues of C5^2");
    const auto reference = oracle::eigenvalues_descending(c52);
    near_all(c, graph_spectrum(c52).eigenvalues, reference, 1e-8, "Jacobi vs Eigen on C5^2");
    for (auto [v, n] : {std::pair<std::size_t, std::size_t>{4, 2}, {4, 3}, {5, 2}}) {
        const double solver = graph_spectrum(or_power(make_cycle(v), n)).largest();
        c.near(solver, cycle_power_largest_eig(v, n), 1e-6,
               "lambda_1(C" + std::to_string(v) + "^" + std::to_string(n) + ") closed form");
    }
    return c;
}

Criterion eigen_bounds() {
    Criterion c(6, "smallest-eigenvalue lower bounds on C5^2");
    const Graph c52 = or_power(make_cycle(5), 2);
    const auto b = smallest_eig_lower_bounds(25, c52.edge_count(), degrees(c52));
    c.near(b.brigham, -60, 1e-9, "brigham");
    c.near(b.hong, -12.748, 1e-3, "hong");
    const double lmin = graph_spectrum(c52).smallest();
    c.near(lmin, -6.09, 1e-2, "solver lambda_25");
    c.check(b.brigham <= lmin, "brigham <= lambda_25");
    c.check(b.hong <= lmin, "hong <= lambda_25");
    return c;
}

Criterion gershgorin_example() {
    Criterion c(7, "Gershgorin intervals and lambda_1 window of the example graph");
    const Graph g = example5_graph();
    const auto gct = gershgorin(adjacency_matrix(g));
    std::vector<std::pair<double, double>> iv;
    for (const auto& i : gct.intervals) iv.emplace_back(i.lo, i.hi);
    std::sort(iv.begin(), iv.end());
    const std::vector<std::pair<double, double>> want{{-3, 3}, {-3, 3}, {-2, 2}, {-2, 2}, {-2, 2}};
    c.check(iv == want, "scalar intervals {[-2,2] x3, [-3,3] x2}");

    const Graph g2 = or_power(g, 2);
    const auto env = gershgorin(adjacency_matrix(g2), GershgorinMode::block_nested, 5).envelope();
    c.near(env.lo, -18, 1e-9, "block envelope lower end");
    c.near(env.hi, 18, 1e-9, "block envelope upper end");

    const auto window = chromatic_bounds_spectral(BoundVariant::lambda1_window, g, 2);
    c.near(window.details.at("window_lo"), 12, 1e-9, "lambda_1 window lower end");
    c.near(window.details.at("window_hi_refined"), 15, 1e-9, "refined lambda_1 window upper end");
    const double l1 = graph_spectrum(g2).largest();
    c.check(l1 >= window.details.at("window_lo") - 1e-9 && l1 <= window.details.at("window_hi_refined") + 1e-9,
            "solver lambda_1 inside the window");
    near_all(c, graph_spectrum(g).eigenvalues, {2.4812, 0.6889, 0.0, -1.1701, -2.0}, 1e-3, "eigenvalues of A_f1");
    return c;
}

Criterion sandwiches() {
    Criterion c(8, "bound sandwiches on random connected graphs and their squares");
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    const std::size_t corpus = 60;
    std::size_t cross_checked = 0, bound_checks = 0, disc_checks = 0, expansion_checks = 0;
    for (std::size_t t = 0; t < corpus; ++t) {
        const std::size_t v = 3 + t % 8;
        const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
        const Graph g = oracle::random_connected_graph(rng, v, p);
        const std::string tag = "graph " + std::to_string(t) + " (V=" + std::to_string(v) + ", E=" +
                                std::to_string(g.edge_count()) + ")";
        c.check(is_connected(g), tag + " connected");

        ExactOptions opts;
        opts.guard = 128;
        const auto chis = power_chromatic_numbers(g, 2, opts);
        c.equal(static_cast<long long>(chis[0]), static_cast<long long>(oracle::chromatic_number(g)),
                tag + " chi vs backtracking");
        const Graph g2 = or_power(g, 2);
        try {
            ExactOptions quick;
            quick.guard = 128;
            quick.timeout = std::chrono::milliseconds(1000);
            const auto direct = exact_chromatic_number(g2, quick);
            c.equal(static_cast<long long>(direct.chi), static_cast<long long>(chis[1]), tag + " chi(G^2) two solvers");
            ++cross_checked;
        } catch (const TimeoutExceeded&) {
        }

        const bool cycle = cycle_order(g).has_value();
        for (std::size_t n = 1; n <= 2; ++n) {
            const double chi = static_cast<double>(chis[n - 1]);
            std::vector<BoundVariant> variants{BoundVariant::hoffman_direct, BoundVariant::degree,
                                               BoundVariant::general, BoundVariant::lambda1_window,
                                               BoundVariant::gct_split};
            if (cycle) variants.push_back(BoundVariant::cycle_power);
            for (auto variant : variants) {
                const auto r = chromatic_bounds_spectral(variant, g, n);
                std::ostringstream os;
                os << tag << " n=" << n << " " << to_string(variant) << ": " << r.lower << " <= " << chi
                   << " <= " << r.upper;
                c.check(r.lower <= chi + 1e-9 && chi <= r.upper + 1e-9, os.str());
                ++bound_checks;
            }
        }

        for (const Graph* h : {&g, &g2}) {
            const auto m = adjacency_matrix(*h);
            const auto ev = graph_spectrum(*h).eigenvalues;
            std::vector<GershgorinIntervals> families{gershgorin(m)};
            if (h == &g2) {
                families.push_back(gershgorin(m, GershgorinMode::block, v));
                families.push_back(gershgorin(m, GershgorinMode::block_nested, v));
            }
            for (const auto& fam : families)
                for (double x : ev) {
                    c.check(fam.covers(x, 1e-9), tag + " Gershgorin covers " + std::to_string(x));
                    ++disc_checks;
                }
        }

        const std::size_t total = v * v;
        for (std::size_t size : {std::size_t{1}, std::max<std::size_t>(1, total / 3), total - 1}) {
            const auto y = sample_subset(total, size, 97 * t + size);
            const auto r = expansion_report(g, 2, y);
            c.check(r.rate == Rational(static_cast<long long>(oracle::outside_neighbours(g2, members(y))),
                                       static_cast<long long>(size)),
                    tag + " measured rate");
            const double inclusive = to_double(r.adjacency_rate);
            if (r.bounds.tanner_lower) c.check(*r.bounds.tanner_lower <= inclusive + 1e-9, tag + " tanner lower");
            if (r.bounds.cycle_lower) c.check(*r.bounds.cycle_lower <= inclusive + 1e-9, tag + " cycle lower");
            c.check(to_double(r.rate) <= r.bounds.complete_upper + 1e-9, tag + " complete upper");
            ++expansion_checks;
        }
    }
    const double s = seconds_since(t0);
    c.check(s <= 300.0, "runtime within 5 minutes");
    std::ostringstream os;
    os << corpus << " graphs, " << bound_checks << " bound checks, " << disc_checks << " disc checks, "
       << expansion_checks << " subsets, " << cross_checked << " squares cross-checked by DSATUR, " << s << " s";
    c.note(os.str());
    return c;
}

Criterion codec() {
    Criterion c(9, "codec losslessness on the parity example");
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto plan = build_codec(example1_spec(), example1_pmf(), n);
        const auto rt = round_trip(plan);
        std::size_t want = 1;
        for (std::size_t i = 0; i < n; ++i) want *= 8;
        c.equal(static_cast<long long>(rt.pairs_checked), static_cast<long long>(want),
                "pairs checked n=" + std::to_string(n));
        c.equal(static_cast<long long>(rt.failures), 0, "round-trip failures n=" + std::to_string(n));
    }
    const auto plan = build_codec(example1_spec(), example1_pmf(), 1);
    const auto a = simulate(plan, 100000, 2024);
    c.near(a.first.empirical, 1.0, 0.02, "empirical rate source 1");
    c.near(a.second.empirical, 1.0, 0.02, "empirical rate source 2");
    c.check(a.lossless, "simulation lossless");
    const auto b = simulate(plan, 100000, 2024);
    c.check(dump_json(to_json(a)) == dump_json(to_json(b)), "rerun with the same seed is byte-identical");
    return c;
}

Criterion degree_formulas() {
    Criterion c(10, "degree formulas against brute-force powers");
    struct Case {
        std::string name;
        Graph g;
    };
    const std::vector<Case> cases{{"C4", make_cycle(4)}, {"C5", make_cycle(5)}, {"prism", make_prism()}, {"P3", make_path(3)}};
    for (const auto& cs : cases) {
        const auto deg = degrees(cs.g);
        const std::size_t v = cs.g.vertex_count();
        for (std::size_t n = 2; n <= 3; ++n) {
            const std::string tag = cs.name + "^" + std::to_string(n);
            const auto ref = oracle::or_power_matrix(cs.g, n);
            std::vector<std::size_t> brute;
            for (const auto& row : ref) brute.push_back(static_cast<std::size_t>(std::count(row.begin(), row.end(), true)));
            const Graph gn = or_power(cs.g, n);
            c.check(degrees(gn) == brute, tag + " library degrees vs brute force");
            TupleIndex idx(v, n);
            bool tuples_ok = true;
            for (std::size_t i = 0; i < idx.size(); ++i) tuples_ok &= tuple_degree(deg, idx.decode(i)) == brute[i];
            c.check(tuples_ok, tag + " tuple degree formula");
            if (cs.name[0] == 'C') {
                const auto f = degree_formula(DegreeFamily::cycle, DegreeParams{v, 2, {}}, n);
                for (auto d : brute) c.equal(static_cast<long long>(f.front()), static_cast<long long>(d), tag + " cycle formula");
            } else if (cs.name == "prism") {
                const auto f = degree_formula(DegreeFamily::regular, DegreeParams{v, 3, {}}, n);
                for (auto d : brute) c.equal(static_cast<long long>(f.front()), static_cast<long long>(d), tag + " regular formula");
            }
            const auto general = degree_formula(DegreeFamily::general, DegreeParams{v, 0, deg}, n);
            for (std::size_t x = 0; x < v; ++x) {
                const std::vector<std::size_t> diag(n, x);
                c.equal(static_cast<long long>(general[x]), static_cast<long long>(brute[idx.encode(diag)]),
                        tag + " general formula at vertex " + std::to_string(x));
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::function<Criterion()>> suite{chromatic_sequence, even_cycles, entropy_values, fractional,
                                                        spectra,            eigen_bounds, gershgorin_example,
                                                        sandwiches,         codec,        degree_formulas};
    std::size_t passed = 0;
    int index = 0;
    for (const auto& run : suite) {
        ++index;
        try {
            const Criterion c = run();
            c.print(std::cout);
            passed += c.passed() ? 1 : 0;
        } catch (const std::exception& e) {
            std::cout << "FAIL  criterion " << index << ": threw " << e.what() << "\n";
        }
        std::cout.flush();
    }
    std::cout << passed << "/" << suite.size() << " criteria passed\n";
    return passed == suite.size() ? 0 : 1;
}
