#include "chromacode/char_graph.hpp"

#include "chromacode/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace chromacode {

namespace {

void check_dims(const FunctionSpec& spec, const JointPMF& pmf) {
    if (spec.x1 != pmf.x1 || spec.x2 != pmf.x2) {
        throw InvalidArgument("function table is " + std::to_string(spec.x1) + "x" + std::to_string(spec.x2) +
                              " but the joint distribution is " + std::to_string(pmf.x1) + "x" +
                              std::to_string(pmf.x2));
    }
}

}  // namespace

FunctionSpec make_function_spec(std::size_t x1, std::size_t x2, const std::vector<std::vector<long long>>& f) {
    if (x1 == 0 || x2 == 0) throw InvalidArgument("alphabets must be nonempty");
    if (f.size() != x1) throw InvalidArgument("function table has wrong number of rows");
    std::map<long long, int> ids;
    for (const auto& row : f) {
        if (row.size() != x2) throw InvalidArgument("function table row has wrong length");
        for (auto v : row) ids.emplace(v, 0);
    }
    FunctionSpec spec{x1, x2, {}, {}};
    int next = 0;
    for (auto& [label, id] : ids) {
        id = next++;
        spec.labels.push_back(std::to_string(label));
    }
    for (const auto& row : f)
        for (auto v : row) spec.table.push_back(ids[v]);
    return spec;
}

FunctionSpec make_function_spec_labels(std::size_t x1, std::size_t x2,
                                       const std::vector<std::vector<std::string>>& f) {
    if (x1 == 0 || x2 == 0) throw InvalidArgument("alphabets must be nonempty");
    if (f.size() != x1) throw InvalidArgument("function table has wrong number of rows");
    std::map<std::string, int> ids;
    for (const auto& row : f) {
        if (row.size() != x2) throw InvalidArgument("function table row has wrong length");
        for (const auto& v : row) ids.emplace(v, 0);
    }
    FunctionSpec spec{x1, x2, {}, {}};
    int next = 0;
    for (auto& [label, id] : ids) {
        id = next++;
        spec.labels.push_back(label);
    }
    for (const auto& row : f)
        for (const auto& v : row) spec.table.push_back(ids[v]);
    return spec;
}

std::vector<Rational> JointPMF::marginal1() const {
    std::vector<Rational> m(x1, Rational(0));
    for (std::size_t a = 0; a < x1; ++a)
        for (std::size_t b = 0; b < x2; ++b) m[a] += (*this)(a, b);
    return m;
}

std::vector<Rational> JointPMF::marginal2() const {
    std::vector<Rational> m(x2, Rational(0));
    for (std::size_t a = 0; a < x1; ++a)
        for (std::size_t b = 0; b < x2; ++b) m[b] += (*this)(a, b);
    return m;
}

JointPMF make_joint_pmf(std::size_t x1, std::size_t x2, std::vector<Rational> probs) {
    if (x1 == 0 || x2 == 0) throw InvalidArgument("alphabets must be nonempty");
    if (probs.size() != x1 * x2) throw InvalidArgument("joint distribution has wrong number of entries");
    for (const auto& p : probs)
        if (p < 0) throw InvalidArgument("negative probability " + format_rational(p));
    if (sum(probs) != 1) throw InvalidArgument("probabilities sum to " + format_rational(sum(probs)) + ", not 1");
    return JointPMF{x1, x2, std::move(probs)};
}

JointPMF uniform_joint_pmf(std::size_t x1, std::size_t x2) {
    if (x1 == 0 || x2 == 0) throw InvalidArgument("alphabets must be nonempty");
    Rational p(1, static_cast<long long>(x1 * x2));
    return make_joint_pmf(x1, x2, std::vector<Rational>(x1 * x2, p));
}

Graph build_characteristic_graph(const FunctionSpec& spec, const JointPMF& pmf, Source source) {
    check_dims(spec, pmf);
    const bool first = (source == Source::first);
    const std::size_t n = first ? spec.x1 : spec.x2;
    const std::size_t side = first ? spec.x2 : spec.x1;
    auto prob = [&](std::size_t own, std::size_t other) -> const Rational& {
        return first ? pmf(own, other) : pmf(other, own);
    };
    auto value = [&](std::size_t own, std::size_t other) { return first ? spec(own, other) : spec(other, own); };
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t s = 0; s < side; ++s) {
                if (prob(a, s) > 0 && prob(b, s) > 0 && value(a, s) != value(b, s)) {
                    rows[a].set(b);
                    rows[b].set(a);
                    break;
                }
            }
        }
    }
    return Graph(n, std::move(rows));
}

std::optional<LookupConflict> find_lookup_conflict(const FunctionSpec& spec, const JointPMF& pmf,
                                                   const Coloring& c1, const Coloring& c2) {
    check_dims(spec, pmf);
    if (c1.colors.size() != spec.x1 || c2.colors.size() != spec.x2) {
        throw InvalidArgument("coloring length does not match the alphabet size");
    }
    std::map<std::pair<ColorId, ColorId>, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t a = 0; a < spec.x1; ++a) {
        for (std::size_t b = 0; b < spec.x2; ++b) {
            if (pmf(a, b) <= 0) continue;
            auto key = std::make_pair(c1.colors[a], c2.colors[b]);
            auto [it, fresh] = seen.emplace(key, std::make_pair(a, b));
            if (!fresh && spec(it->second.first, it->second.second) != spec(a, b)) {
                return LookupConflict{it->second.first, it->second.second, a, b};
            }
        }
    }
    return std::nullopt;
}

bool lookup_table_consistent(const FunctionSpec& spec, const JointPMF& pmf, const Coloring& c1,
                             const Coloring& c2) {
    return !find_lookup_conflict(spec, pmf, c1, c2).has_value();
}

bool verify_coloring_sufficiency(const FunctionSpec& spec, const JointPMF& pmf, const Coloring& c1,
                                 const Coloring& c2) {
    check_dims(spec, pmf);
    if (!is_valid_coloring(build_characteristic_graph(spec, pmf, Source::first), c1)) {
        throw InvalidArgument("coloring of the first source is not valid on its characteristic graph");
    }
    if (!is_valid_coloring(build_characteristic_graph(spec, pmf, Source::second), c2)) {
        throw InvalidArgument("coloring of the second source is not valid on its characteristic graph");
    }
    return lookup_table_consistent(spec, pmf, c1, c2);
}

FunctionSpec example1_spec() {
    std::vector<std::vector<long long>> f(4, std::vector<long long>(2));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b) f[a][b] = (a + b) % 2;
    return make_function_spec(4, 2, f);
}

JointPMF example1_pmf() { return uniform_joint_pmf(4, 2); }

FunctionSpec cycle_spec(std::size_t v) {
    if (v < 3) throw InvalidArgument("cycle function needs V >= 3");
    std::vector<std::vector<long long>> f(v, std::vector<long long>(v, 0));
    for (std::size_t e = 0; e < v; ++e) f[(e + 1) % v][e] = 1;
    return make_function_spec(v, v, f);
}

JointPMF cycle_pmf(std::size_t v) {
    if (v < 3) throw InvalidArgument("cycle function needs V >= 3");
    std::vector<Rational> probs(v * v, Rational(0));
    Rational p(1, static_cast<long long>(2 * v));
    for (std::size_t e = 0; e < v; ++e) {
        probs[e * v + e] = p;
        probs[((e + 1) % v) * v + e] = p;
    }
    return make_joint_pmf(v, v, std::move(probs));
}

}  // namespace chromacode
