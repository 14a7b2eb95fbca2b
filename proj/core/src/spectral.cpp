#include "chromacode/spectral.hpp"

#include "chromacode/errors.hpp"
#include "chromacode/or_product.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chromacode {

std::vector<DistinctEigenvalue> Spectrum::distinct(double tol) const {
    std::vector<double> asc(eigenvalues.rbegin(), eigenvalues.rend());
    std::vector<DistinctEigenvalue> out;
    for (double x : asc) {
        if (!out.empty() && std::abs(x - out.back().value) <= tol) {
            auto& d = out.back();
            d.value = (d.value * static_cast<double>(d.multiplicity) + x) / static_cast<double>(d.multiplicity + 1);
            ++d.multiplicity;
        } else {
            out.push_back({x, 1});
        }
    }
    return out;
}

EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& m, double tol, double symmetry_tol, std::size_t guard) {
    if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
    const Eigen::Index n = m.rows();
    check_guard(static_cast<std::size_t>(n), guard, "eigensolver dimension");
    if (n == 0) return {};
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > symmetry_tol * scale) {
        throw InvalidArgument("matrix is not symmetric");
    }
    Eigen::MatrixXd a = 0.5 * (m + m.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double frob = std::max(1.0, a.norm());
    EigenDecomposition out;
    constexpr std::size_t kMaxSweeps = 100;
    for (; out.sweeps < kMaxSweeps; ++out.sweeps) {
        double off = 0;
        for (Eigen::Index q = 1; q < n; ++q)
            for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
        if (std::sqrt(off) <= tol * frob) break;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.spectrum.eigenvalues.push_back(a(order[k], order[k]));
        out.vectors.col(k) = v.col(order[k]);
    }
    // Spot-check the extreme pairs and the middle one.
    for (Eigen::Index k : {Eigen::Index(0), n / 2, n - 1}) {
        const double r = (m * out.vectors.col(k) - out.spectrum.eigenvalues[k] * out.vectors.col(k)).norm();
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m, double tol, double symmetry_tol, std::size_t guard) {
    return symmetric_eigen(m, tol, symmetry_tol, guard).spectrum;
}

Spectrum graph_spectrum(const Graph& g) { return symmetric_eigenvalues(adjacency_matrix(g)); }

Interval GershgorinIntervals::envelope() const {
    if (intervals.empty()) return {};
    Interval e = intervals.front();
    for (const auto& iv : intervals) {
        e.lo = std::min(e.lo, iv.lo);
        e.hi = std::max(e.hi, iv.hi);
    }
    return e;
}

bool GershgorinIntervals::covers(double x, double tol) const {
    return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& iv) { return iv.contains(x, tol); });
}

namespace {

double spectral_norm(const Eigen::MatrixXd& b) {
    if (b.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    Eigen::MatrixXd gram = b.transpose() * b;
    return std::sqrt(std::max(0.0, symmetric_eigenvalues(gram).largest()));
}

}  // namespace

GershgorinIntervals gershgorin(const Eigen::MatrixXd& m, GershgorinMode mode, std::size_t block_size) {
    if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
    const Eigen::Index n = m.rows();
    GershgorinIntervals out;
    out.mode = mode;
    if (mode == GershgorinMode::scalar) {
        out.block_size = 1;
        for (Eigen::Index k = 0; k < n; ++k) {
            const double r = m.row(k).cwiseAbs().sum() - std::abs(m(k, k));
            out.intervals.push_back({m(k, k) - r, m(k, k) + r});
        }
        return out;
    }
    if (block_size == 0 || n % static_cast<Eigen::Index>(block_size) != 0) {
        throw InvalidArgument("block size " + std::to_string(block_size) + " does not divide dimension " +
                              std::to_string(n));
    }
    out.block_size = block_size;
    const Eigen::Index b = static_cast<Eigen::Index>(block_size);
    const Eigen::Index blocks = n / b;
    // Norms of identical off-diagonal blocks are cached.
    std::vector<std::pair<Eigen::MatrixXd, double>> norm_cache;
    auto block_norm = [&](const Eigen::MatrixXd& blk) {
        for (const auto& [key, val] : norm_cache)
            if (key == blk) return val;
        double val = spectral_norm(blk);
        norm_cache.emplace_back(blk, val);
        return val;
    };
    for (Eigen::Index k = 0; k < blocks; ++k) {
        double radius = 0;
        for (Eigen::Index t = 0; t < blocks; ++t)
            if (t != k) radius += block_norm(m.block(k * b, t * b, b, b));
        Eigen::MatrixXd diag = m.block(k * b, k * b, b, b);
        if (mode == GershgorinMode::block) {
            for (double c : symmetric_eigenvalues(diag).eigenvalues) out.intervals.push_back({c - radius, c + radius});
        } else {
            auto inner = gershgorin(diag, GershgorinMode::scalar);
            for (const auto& iv : inner.intervals) out.intervals.push_back({iv.lo - radius, iv.hi + radius});
        }
    }
    return out;
}

double cycle_power_largest_eig(std::size_t v, std::size_t n) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    double out = 2.0;
    double p = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        p *= static_cast<double>(v);
        out += 2.0 * p;
    }
    return out;
}

Spectrum all_ones_spectrum(std::size_t v) {
    if (v == 0) throw InvalidArgument("all-ones matrix needs V >= 1");
    Spectrum s;
    s.eigenvalues.assign(v, 0.0);
    s.eigenvalues[0] = static_cast<double>(v);
    return s;
}

SplitDecomposition split_decomposition(const Graph& gn) {
    const auto& shape = gn.tuple_shape();
    if (!shape) throw InvalidArgument("split decomposition needs a graph with recorded power shape");
    SplitDecomposition out;
    const Eigen::MatrixXd a = adjacency_matrix(gn);
    out.block_size = gn.vertex_count() / shape->base;
    const Eigen::Index b = static_cast<Eigen::Index>(out.block_size);
    out.a_gr = Eigen::MatrixXd::Zero(a.rows(), a.cols());
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(shape->base); ++k)
        out.a_gr.block(k * b, k * b, b, b) = a.block(k * b, k * b, b, b);
    out.a_fc = a - out.a_gr;
    return out;
}

SplitReport split_report(const Graph& gn, const Graph* base) {
    SplitReport rep;
    rep.split = split_decomposition(gn);
    rep.full = symmetric_eigenvalues(rep.split.a_gr + rep.split.a_fc);
    rep.gr = symmetric_eigenvalues(rep.split.a_gr);
    rep.fc = symmetric_eigenvalues(rep.split.a_fc);
    for (std::size_t k = 0; k < rep.full.eigenvalues.size(); ++k) {
        rep.index_sum.push_back(rep.gr.eigenvalues[k] + rep.fc.eigenvalues[k]);
        rep.deviation.push_back(rep.index_sum.back() - rep.full.eigenvalues[k]);
    }
    rep.lambda1_sum = rep.gr.largest() + rep.fc.largest();
    if (base != nullptr) {
        const std::size_t n = gn.tuple_shape()->length;
        rep.lambda1_iterative = graph_spectrum(*base).largest();
        for (std::size_t j = 2; j <= n; ++j) {
            auto fc = split_decomposition(or_power(*base, j, gn.vertex_count())).a_fc;
            rep.lambda1_iterative += symmetric_eigenvalues(fc).largest();
        }
    }
    return rep;
}

double hong_bound(double v) { return -std::sqrt((v / 2.0) * ((v + 1.0) / 2.0)); }

SmallestEigBounds smallest_eig_lower_bounds(std::size_t v, std::size_t e, std::size_t min_degree,
                                            std::size_t max_degree) {
    const double V = static_cast<double>(v), E = static_cast<double>(e);
    const double dmin = static_cast<double>(min_degree), dmax = static_cast<double>(max_degree);
    SmallestEigBounds b;
    b.brigham = -std::sqrt(2.0 * E * (V - 1.0) / 2.0);
    b.hong = hong_bound(V);
    b.das = -std::sqrt(std::max(0.0, 2.0 * E - (V - 1.0) * dmin + (dmin - 1.0) * dmax));
    return b;
}

SmallestEigBounds smallest_eig_lower_bounds(std::size_t v, std::size_t e, const std::vector<std::size_t>& degrees) {
    if (degrees.size() != v) throw InvalidArgument("degree list length differs from V");
    if (std::accumulate(degrees.begin(), degrees.end(), std::size_t(0)) != 2 * e) {
        throw InvalidArgument("degree list is inconsistent with the edge count");
    }
    if (degrees.empty()) return {};
    auto [mn, mx] = std::minmax_element(degrees.begin(), degrees.end());
    return smallest_eig_lower_bounds(v, e, *mn, *mx);
}

std::string to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::hoffman_direct: return "hoffman-direct";
        case BoundVariant::cycle_power: return "cycle-power";
        case BoundVariant::degree: return "degree";
        case BoundVariant::general: return "general";
        case BoundVariant::lambda1_window: return "lambda1-window";
        case BoundVariant::gct_split: return "gct-split";
    }
    return "unknown";
}

BoundVariant bound_variant_from_string(const std::string& s) {
    for (auto v : {BoundVariant::hoffman_direct, BoundVariant::cycle_power, BoundVariant::degree,
                   BoundVariant::general, BoundVariant::lambda1_window, BoundVariant::gct_split}) {
        if (to_string(v) == s) return v;
    }
    throw InvalidArgument("unknown bound variant '" + s + "'");
}

double robust_floor(double x) { return std::floor(x + 1e-9); }

namespace {

double geometric(double v, std::size_t from, std::size_t to) {
    double s = 0;
    for (std::size_t j = from; j <= to; ++j) s += std::pow(v, static_cast<double>(j));
    return s;
}

// 1 - lambda_1 / lambda_min, with an empty or edgeless spectrum giving 1.
double hoffman_lower(double lambda1, double lambda_min) {
    if (lambda_min >= -1e-12) return 1.0;
    return 1.0 - lambda1 / lambda_min;
}

}  // namespace

BoundReport chromatic_bounds_cycle_power(std::size_t v, std::size_t n) {
    if (v < 3) throw InvalidArgument("cycle-power bound needs V >= 3");
    BoundReport r;
    r.name = to_string(BoundVariant::cycle_power);
    r.source = "cycle powers: max of Brigham and Hong for the smallest eigenvalue";
    const double lambda1 = cycle_power_largest_eig(v, n);
    const double vn = std::pow(static_cast<double>(v), static_cast<double>(n));
    const double edges = vn * lambda1 / 2.0;
    const double brigham = -std::sqrt(2.0 * edges * (vn - 1.0) / 2.0);
    const double hong = hong_bound(vn);
    r.lower = hoffman_lower(lambda1, std::max(brigham, hong));
    r.upper = lambda1 + 1.0;
    r.details = {{"lambda1", lambda1}, {"brigham", brigham}, {"hong", hong}};
    return r;
}

BoundReport chromatic_bounds_spectral(BoundVariant variant, const Graph& g, std::size_t n, std::size_t guard) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    const std::size_t v = g.vertex_count();
    const double V = static_cast<double>(v);
    const auto deg = degrees(g);
    const double dmax = deg.empty() ? 0.0 : static_cast<double>(*std::max_element(deg.begin(), deg.end()));
    const double dmin = deg.empty() ? 0.0 : static_cast<double>(*std::min_element(deg.begin(), deg.end()));
    const double davg = average_degree(g);
    const double vn = std::pow(V, static_cast<double>(n));

    switch (variant) {
        case BoundVariant::cycle_power: {
            if (!cycle_order(g)) throw InvalidArgument("cycle-power variant needs a cycle graph");
            return chromatic_bounds_cycle_power(v, n);
        }
        case BoundVariant::hoffman_direct: {
            Graph gn = or_power(g, n, guard);
            auto s = graph_spectrum(gn);
            BoundReport r{to_string(variant), "Hoffman lower and Wilf upper from the solver spectrum", 0, 0, {}, {}};
            r.lower = hoffman_lower(s.largest(), s.smallest());
            r.upper = robust_floor(s.largest()) + 1.0;
            r.details = {{"lambda1", s.largest()}, {"lambda_min", s.smallest()}};
            return r;
        }
        case BoundVariant::degree: {
            // Degrees of G^n follow from the base degrees: min/max scale by the geometric sum.
            const double geo = geometric(V, 0, n - 1);
            const double dn_min = dmin * geo, dn_max = dmax * geo, dn_avg = davg * geo;
            const double edges = vn * dn_avg / 2.0;
            const double das = -std::sqrt(std::max(0.0, 2.0 * edges - (vn - 1.0) * dn_min + (dn_min - 1.0) * dn_max));
            BoundReport r{to_string(variant), "Das bound for the smallest eigenvalue with degrees of G^n", 0, 0, {}, {}};
            r.lower = hoffman_lower(dn_avg, das);
            r.upper = dn_max + 1.0;
            r.details = {{"das", das}, {"degree_min", dn_min}, {"degree_max", dn_max}, {"degree_avg", dn_avg}};
            return r;
        }
        case BoundVariant::general: {
            Graph gn = or_power(g, n, guard);
            const double lambda1 = graph_spectrum(g).largest();
            const double u = lambda1 + dmax * geometric(V, 1, n - 1);
            const double lmin = graph_spectrum(gn).smallest();
            BoundReport r{to_string(variant), "general graphs: lambda_1(A) + d_max * sum V^j", 0, 0, {}, {}};
            r.lower = hoffman_lower(u, lmin);
            r.upper = robust_floor(u) + 1.0;
            r.details = {{"estimate", u}, {"lambda_min", lmin}, {"upper_without_plus_one", robust_floor(u)}};
            return r;
        }
        case BoundVariant::lambda1_window:
        case BoundVariant::gct_split: {
            Graph gn = or_power(g, n, guard);
            double gr1 = 0, fc1 = 0;
            if (n == 1) {
                fc1 = graph_spectrum(g).largest();
            } else {
                auto split = split_decomposition(gn);
                gr1 = symmetric_eigenvalues(split.a_gr).largest();
                fc1 = symmetric_eigenvalues(split.a_fc).largest();
            }
            const double s = gr1 + fc1;
            const double hong = hong_bound(vn);
            BoundReport r;
            r.name = to_string(variant);
            if (variant == BoundVariant::gct_split) {
                r.source = "split decomposition with the Hong bound";
                r.lower = hoffman_lower(s, hong);
                r.upper = robust_floor(s) + 1.0;
                r.details = {{"lambda1_gr", gr1}, {"lambda1_fc", fc1}, {"lambda1_sum", s}, {"hong", hong}};
                return r;
            }
            const double block = std::pow(V, static_cast<double>(n - 1));
            const double window_lo = davg * block;
            const double window_hi = dmax * geometric(V, 0, n - 1);
            const double refined_hi = robust_floor(s) + 1.0;
            r.source = "largest-eigenvalue window from degrees and the split decomposition";
            r.lower = hoffman_lower(window_lo, hong);
            r.upper = robust_floor(std::min(window_hi, s)) + 1.0;
            r.details = {{"window_lo", window_lo},
                         {"window_hi", window_hi},
                         {"window_hi_refined", std::min(window_hi, refined_hi)},
                         {"lambda1_sum", s},
                         {"hong", hong}};
            return r;
        }
    }
    throw InvalidArgument("unknown bound variant");
}

std::vector<std::size_t> distinct_eigenvalue_counts(const Graph& g, std::size_t n_max, double tol, std::size_t guard) {
    std::vector<std::size_t> out;
    for (std::size_t t = 1; t <= n_max; ++t) out.push_back(graph_spectrum(or_power(g, t, guard)).distinct(tol).size());
    return out;
}

Spectrum regular_power_spectrum(const Spectrum& base, std::size_t v, std::size_t n) {
    if (n == 0) throw InvalidArgument("power must be at least 1");
    if (base.eigenvalues.size() != v) throw InvalidArgument("base spectrum has wrong size");
    Spectrum cur = base;
    const double d = base.largest();
    double block = 1.0;
    double d_prev = d;
    for (std::size_t t = 2; t <= n; ++t) {
        block *= static_cast<double>(v);
        std::vector<double> next;
        for (double mu : base.eigenvalues) next.push_back(mu * block + d_prev);
        bool skipped = false;
        for (double lam : cur.eigenvalues) {
            if (!skipped && std::abs(lam - d_prev) < 1e-9) {
                skipped = true;
                continue;
            }
            for (std::size_t i = 0; i < v; ++i) next.push_back(lam);
        }
        std::sort(next.begin(), next.end(), std::greater<>());
        cur.eigenvalues = std::move(next);
        d_prev = d * block + d_prev;
    }
    return cur;
}

}  // namespace chromacode
