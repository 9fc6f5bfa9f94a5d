#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace rvc {

using Vertex = int;
using Color = int;

/// Unordered pair of distinct vertices, stored with first < second.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    /// Throws std::invalid_argument on n == 0, self-loops or out-of-range
    /// endpoints. Duplicate edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    /// Sorted, deduplicated edge list.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbours of v in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Set of unordered pairs of distinct vertices of a graph on `n` vertices.
class PairSet {
public:
    PairSet() = default;
    /// Throws std::invalid_argument on diagonal or out-of-range pairs.
    PairSet(int n, std::span<const Edge> pairs);
    PairSet(int n, std::initializer_list<std::pair<int, int>> pairs);

    /// All unordered distinct pairs over n vertices.
    static PairSet all_pairs(int n);

    int order() const { return n_; }
    const std::vector<Edge>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(Vertex a, Vertex b) const;

    friend bool operator==(const PairSet&, const PairSet&) = default;

private:
    int n_ = 0;
    std::vector<Edge> pairs_;
};

/// Total vertex colouring with colours in 1..k.
class VertexColoring {
public:
    VertexColoring() = default;
    /// Throws std::invalid_argument if k < 1 or any entry lies outside 1..k.
    VertexColoring(std::vector<Color> colors, int k);

    static VertexColoring constant(int n, int k = 1) { return {std::vector<Color>(n, 1), k}; }

    int order() const { return static_cast<int>(colors_.size()); }
    int budget() const { return k_; }
    Color operator[](Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

private:
    std::vector<Color> colors_;
    int k_ = 1;
};

/// Shortest-path length, or kInfinity when u and v lie in different components.
int distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source` to every vertex (kInfinity if unreachable).
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Row-major n*n distance matrix.
std::vector<int> all_pairs_distances(const Graph& g);

/// Throws std::invalid_argument if some edge of `drop` is not in g.
Graph remove_edges(const Graph& g, std::span<const Edge> drop);

/// Graph with the extra edges added; throws on invalid endpoints.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Throws std::invalid_argument on disconnected input.
int diameter(const Graph& g);

// Named families used throughout tests and sweeps.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace rvc
