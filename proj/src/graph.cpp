#include "rvc/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rvc {

namespace {

std::string describe(const Edge& e)
{
    std::ostringstream os;
    os << "(" << e.first << "," << e.second << ")";
    return os.str();
}

std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> raw)
{
    std::vector<Edge> out;
    out.reserve(raw.size());
    for (auto [a, b] : raw)
        out.emplace_back(a, b);
    return out;
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n <= 0)
        throw std::invalid_argument("graph must have at least one vertex");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.first == e.second)
            throw std::invalid_argument("self-loop " + describe(e));
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("edge " + describe(e) + ": endpoint out of range for n=" + std::to_string(n));
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(n, {});
    g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : g.edges_) {
        g.adj_[e.first].push_back(e.second);
        g.adj_[e.second].push_back(e.first);
        g.matrix_[static_cast<std::size_t>(e.first) * n + e.second] = 1;
        g.matrix_[static_cast<std::size_t>(e.second) * n + e.first] = 1;
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, to_edges(edges));
}

PairSet::PairSet(int n, std::span<const Edge> pairs) : n_(n)
{
    for (const auto& p : pairs) {
        if (p.first == p.second)
            throw std::invalid_argument("diagonal pair " + describe(p));
        if (p.first < 0 || p.second >= n)
            throw std::invalid_argument("pair " + describe(p) + ": vertex out of range for n=" + std::to_string(n));
        pairs_.push_back(p);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet::PairSet(int n, std::initializer_list<std::pair<int, int>> pairs)
{
    *this = PairSet(n, to_edges(pairs));
}

PairSet PairSet::all_pairs(int n)
{
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return PairSet(n, pairs);
}

bool PairSet::contains(Vertex a, Vertex b) const
{
    if (a == b)
        return false;
    return std::binary_search(pairs_.begin(), pairs_.end(), Edge(a, b));
}

VertexColoring::VertexColoring(std::vector<Color> colors, int k) : colors_(std::move(colors)), k_(k)
{
    if (k < 1)
        throw std::invalid_argument("colour budget must be at least 1");
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] < 1 || colors_[v] > k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has colour " + std::to_string(colors_[v]) +
                                        " outside 1.." + std::to_string(k));
}

std::vector<int> distances_from(const Graph& g, Vertex source)
{
    if (!g.contains(source))
        throw std::out_of_range("vertex " + std::to_string(source) + " out of range");
    std::vector<int> dist(g.order(), kInfinity);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x))
            if (dist[y] == kInfinity) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

int distance(const Graph& g, Vertex u, Vertex v)
{
    if (!g.contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return distances_from(g, u)[v];
}

std::vector<int> all_pairs_distances(const Graph& g)
{
    const int n = g.order();
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (Vertex s = 0; s < n; ++s) {
        auto row = distances_from(g, s);
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
    return out;
}

Graph remove_edges(const Graph& g, std::span<const Edge> drop)
{
    std::vector<Edge> gone(drop.begin(), drop.end());
    std::sort(gone.begin(), gone.end());
    for (const auto& e : gone)
        if (!g.contains(e.first) || !g.contains(e.second) || !g.adjacent(e.first, e.second))
            throw std::invalid_argument("edge " + describe(e) + " is not in the graph");

    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    std::set_difference(g.edges().begin(), g.edges().end(), gone.begin(), gone.end(), std::back_inserter(kept));
    return Graph::from_edges(g.order(), kept);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra)
{
    std::vector<Edge> all = g.edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph::from_edges(g.order(), all);
}

bool is_connected(const Graph& g)
{
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

bool is_complete(const Graph& g)
{
    const long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

int diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s)
        for (int d : distances_from(g, s)) {
            if (d == kInfinity)
                throw std::invalid_argument("diameter of a disconnected graph is undefined");
            best = std::max(best, d);
        }
    return best;
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n)
{
    return Graph::from_edges(n, PairSet::all_pairs(n).pairs());
}

Graph star_graph(int leaves)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

}  // namespace rvc
