#pragma once

#include <boost/dynamic_bitset.hpp>
#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace chromacode {

using VertexId = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<VertexId, VertexId>;

// Recorded when a graph is an n-fold power of a base graph on `base` vertices.
struct TupleShape {
    std::size_t base = 0;
    std::size_t length = 0;
    bool operator==(const TupleShape&) const = default;
};

// Undirected simple graph on vertices 0..V-1 (one-based labels shift down by one).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    // Rows must be symmetric with an empty diagonal; throws InvalidArgument otherwise.
    Graph(std::size_t vertex_count, std::vector<VertexSet> rows,
          std::optional<TupleShape> shape = std::nullopt);

    std::size_t vertex_count() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(VertexId v) const { return rows_[v]; }
    const std::vector<VertexSet>& rows() const { return rows_; }

    // Sorted lexicographically with u < v.
    std::vector<Edge> edges() const;

    const std::optional<TupleShape>& tuple_shape() const { return shape_; }
    Graph with_tuple_shape(std::optional<TupleShape> shape) const;

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
    std::optional<TupleShape> shape_;
};

enum class GraphKind { cycle, complete, path, custom };

Graph make_graph(GraphKind kind, std::size_t size, const std::vector<Edge>& edges = {});
Graph make_cycle(std::size_t size);
Graph make_complete(std::size_t size);
Graph make_path(std::size_t size);
Graph make_empty(std::size_t size);
Graph make_custom(std::size_t size, const std::vector<Edge>& edges);
// Triangular prism: two triangles {0,1,2}, {3,4,5} joined by i -- i+3.
Graph make_prism();

std::size_t degree(const Graph& g, VertexId v);
std::vector<std::size_t> degrees(const Graph& g);
double average_degree(const Graph& g);
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);

// 2-coloring by BFS from the lowest vertex of each component, or nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);

// If g is a single cycle, returns its vertices in walk order starting at 0
// towards the lower-numbered neighbour.
std::optional<std::vector<VertexId>> cycle_order(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);
Graph relabel(const Graph& g, const std::vector<VertexId>& new_id_of);

struct MisResult {
    std::vector<VertexSet> sets;  // sorted by (lowest member, bit pattern)
    std::size_t max_size = 0;
};

constexpr std::size_t kDefaultMisGuard = 24;

// Bron-Kerbosch with pivoting on the complement graph.
MisResult maximal_independent_sets(const Graph& g, std::size_t guard = kDefaultMisGuard);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

VertexSet make_vertex_set(std::size_t v, const std::vector<VertexId>& members);
std::vector<VertexId> members(const VertexSet& s);

}  // namespace chromacode
