#include "chromacode/graph.hpp"

#include "chromacode/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace chromacode {

namespace {

void check_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph on " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : rows_(vertex_count, VertexSet(vertex_count)) {}

Graph::Graph(std::size_t vertex_count, std::vector<VertexSet> rows, std::optional<TupleShape> shape)
    : rows_(std::move(rows)), shape_(shape) {
    if (rows_.size() != vertex_count) throw InvalidArgument("row count differs from vertex count");
    std::size_t bits = 0;
    for (std::size_t u = 0; u < vertex_count; ++u) {
        if (rows_[u].size() != vertex_count) throw InvalidArgument("row width differs from vertex count");
        if (rows_[u].test(u)) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        bits += rows_[u].count();
    }
    for (std::size_t u = 0; u < vertex_count; ++u) {
        for (auto v = rows_[u].find_first(); v != VertexSet::npos; v = rows_[u].find_next(v)) {
            if (!rows_[v].test(u)) throw InvalidArgument("adjacency is not symmetric");
        }
    }
    edge_count_ = bits / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < rows_.size(); ++u) {
        for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_tuple_shape(std::optional<TupleShape> shape) const {
    Graph copy = *this;
    copy.shape_ = shape;
    return copy;
}

Graph make_custom(std::size_t size, const std::vector<Edge>& edges) {
    if (size == 0) throw InvalidArgument("graph needs at least one vertex");
    std::vector<VertexSet> rows(size, VertexSet(size));
    for (const auto& [u, v] : edges) {
        if (u >= size || v >= size) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an out-of-range endpoint");
        }
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (rows[u].test(v)) {
            throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph(size, std::move(rows));
}

Graph make_cycle(std::size_t size) {
    if (size < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
    return make_custom(size, edges);
}

Graph make_complete(std::size_t size) {
    if (size < 1) throw InvalidArgument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = u + 1; v < size; ++v) edges.emplace_back(u, v);
    return make_custom(size, edges);
}

Graph make_path(std::size_t size) {
    if (size < 1) throw InvalidArgument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
    return make_custom(size, edges);
}

Graph make_empty(std::size_t size) { return make_custom(size, {}); }

Graph make_prism() {
    return make_custom(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_graph(GraphKind kind, std::size_t size, const std::vector<Edge>& edges) {
    switch (kind) {
        case GraphKind::cycle: return make_cycle(size);
        case GraphKind::complete: return make_complete(size);
        case GraphKind::path: return make_path(size);
        case GraphKind::custom: return make_custom(size, edges);
    }
    throw InvalidArgument("unknown graph kind");
}

std::size_t degree(const Graph& g, VertexId v) {
    check_vertex(g, v);
    return g.neighbors(v).count();
}

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> out(g.vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = g.neighbors(v).count();
    return out;
}

double average_degree(const Graph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

bool is_regular(const Graph& g) {
    auto d = degrees(g);
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    VertexSet seen(n);
    std::deque<VertexId> queue{0};
    seen.set(0);
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        VertexSet fresh = g.neighbors(u) - seen;
        for (auto v = fresh.find_first(); v != VertexSet::npos; v = fresh.find_next(v)) {
            seen.set(v);
            queue.push_back(v);
        }
    }
    return seen.all();
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<std::vector<VertexId>> cycle_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) return std::nullopt;
    for (std::size_t v = 0; v < n; ++v)
        if (g.neighbors(v).count() != 2) return std::nullopt;
    std::vector<VertexId> order{0};
    VertexId prev = 0;
    VertexId cur = g.neighbors(0).find_first();
    while (cur != 0) {
        order.push_back(cur);
        auto next = g.neighbors(cur).find_first();
        if (next == prev) next = g.neighbors(cur).find_next(next);
        prev = cur;
        cur = next;
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
    const std::size_t m = vertices.size();
    for (auto v : vertices) check_vertex(g, v);
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && g.adjacent(vertices[i], vertices[j])) rows[i].set(j);
    return Graph(m, std::move(rows));
}

Graph relabel(const Graph& g, const std::vector<VertexId>& new_id_of) {
    const std::size_t n = g.vertex_count();
    if (new_id_of.size() != n) throw InvalidArgument("relabel map has wrong length");
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& [u, v] : g.edges()) {
        rows[new_id_of.at(u)].set(new_id_of.at(v));
        rows[new_id_of.at(v)].set(new_id_of.at(u));
    }
    return Graph(n, std::move(rows));
}

namespace {

struct BronKerbosch {
    const std::vector<VertexSet>& comp;
    std::vector<VertexSet>& out;

    void run(VertexSet r, VertexSet p, VertexSet x) {
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        VertexSet px = p | x;
        VertexId pivot = px.find_first();
        std::size_t best = (p & comp[pivot]).count();
        for (auto u = px.find_next(pivot); u != VertexSet::npos; u = px.find_next(u)) {
            auto c = (p & comp[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        VertexSet candidates = p - comp[pivot];
        for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
            VertexSet r2 = r;
            r2.set(v);
            run(r2, p & comp[v], x & comp[v]);
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

MisResult maximal_independent_sets(const Graph& g, std::size_t guard) {
    const std::size_t n = g.vertex_count();
    check_guard(n, guard, "maximal independent set enumeration");
    std::vector<VertexSet> comp(n);
    for (std::size_t v = 0; v < n; ++v) {
        comp[v] = ~g.neighbors(v);
        comp[v].reset(v);
    }
    MisResult res;
    BronKerbosch bk{comp, res.sets};
    VertexSet all(n);
    all.set();
    bk.run(VertexSet(n), all, VertexSet(n));
    std::sort(res.sets.begin(), res.sets.end(), [](const VertexSet& a, const VertexSet& b) {
        auto ma = members(a), mb = members(b);
        return ma < mb;
    });
    for (const auto& s : res.sets) res.max_size = std::max(res.max_size, s.count());
    return res;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
        a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
    }
    return a;
}

VertexSet make_vertex_set(std::size_t v, const std::vector<VertexId>& ids) {
    VertexSet s(v);
    for (auto id : ids) {
        if (id >= v) throw InvalidArgument("vertex " + std::to_string(id) + " out of range");
        s.set(id);
    }
    return s;
}

std::vector<VertexId> members(const VertexSet& s) {
    std::vector<VertexId> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
    return out;
}

}  // namespace chromacode
