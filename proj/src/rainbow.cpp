#include "rvc/rainbow.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace rvc {

namespace {

std::atomic<std::uint64_t> g_invocations{0};
std::atomic<std::uint64_t> g_expansions{0};
std::atomic<std::uint64_t> g_violations{0};
std::atomic<std::uint64_t> g_peak_fill_ppm{0};

void record(std::uint64_t expansions, std::optional<std::uint64_t> budget)
{
    g_invocations.fetch_add(1, std::memory_order_relaxed);
    g_expansions.fetch_add(expansions, std::memory_order_relaxed);
    if (!budget)
        return;  // unbounded: cannot be exceeded
    if (expansions > *budget)
        g_violations.fetch_add(1, std::memory_order_relaxed);
    auto fill = static_cast<std::uint64_t>(static_cast<long double>(expansions) * 1e6L / static_cast<long double>(*budget));
    auto peak = g_peak_fill_ppm.load(std::memory_order_relaxed);
    while (fill > peak && !g_peak_fill_ppm.compare_exchange_weak(peak, fill, std::memory_order_relaxed)) {
    }
}

class PathSearch {
public:
    PathSearch(const Graph& g, Vertex u, Vertex v, int max_length, const VertexColoring* rainbow, const PathVisitor& visit)
        : g_(g), target_(v), bound_(max_length), rainbow_(rainbow), visit_(visit), dist_(distances_from(g, v)),
          on_path_(g.order(), 0)
    {
        if (rainbow_)
            used_.assign(static_cast<std::size_t>(rainbow_->budget()) + 1, 0);
        path_.reserve(static_cast<std::size_t>(std::max(max_length, 0)) + 1);
        path_.push_back(u);
        on_path_[u] = 1;
    }

    std::uint64_t run()
    {
        if (bound_ >= 1 && dist_[path_.front()] <= bound_)
            expand();
        return expansions_;
    }

private:
    void expand()
    {
        ++expansions_;
        const int len = static_cast<int>(path_.size()) - 1;
        for (Vertex y : g_.neighbors(path_.back())) {
            if (bound_ <= len)
                return;
            if (y == target_) {
                path_.push_back(y);
                bound_ = visit_(path_);
                path_.pop_back();
                continue;
            }
            if (on_path_[y] || dist_[y] == kInfinity || len + 1 + dist_[y] > bound_)
                continue;
            Color col = rainbow_ ? (*rainbow_)[y] : 0;
            if (rainbow_ && used_[col])
                continue;
            if (rainbow_)
                used_[col] = 1;
            on_path_[y] = 1;
            path_.push_back(y);
            expand();
            path_.pop_back();
            on_path_[y] = 0;
            if (rainbow_)
                used_[col] = 0;
        }
    }

    const Graph& g_;
    Vertex target_;
    int bound_;
    const VertexColoring* rainbow_;
    const PathVisitor& visit_;
    std::vector<int> dist_;
    std::vector<std::uint8_t> on_path_;
    std::vector<std::uint8_t> used_;
    std::vector<Vertex> path_;
    std::uint64_t expansions_ = 0;
};

void require_vertex(const Graph& g, Vertex v)
{
    if (!g.contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::optional<std::uint64_t> checked_path_budget(int n, int k)
{
    if (n < 1 || k < 0)
        throw std::invalid_argument("path_budget requires n >= 1 and k >= 0");
    std::uint64_t total = 0;
    std::uint64_t term = 1;  // n^(l-1)
    for (int l = 1; l <= k + 1; ++l) {
        if (total > UINT64_MAX - term)
            return std::nullopt;
        total += term;
        if (l == k + 1)
            break;
        if (term > UINT64_MAX / static_cast<std::uint64_t>(n))
            return std::nullopt;
        term *= static_cast<std::uint64_t>(n);
    }
    return total;
}

std::uint64_t path_budget(int n, int k)
{
    auto b = checked_path_budget(n, k);
    if (!b)
        throw std::overflow_error("path budget for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                  " exceeds 64 bits");
    return *b;
}

EnumeratorAudit enumerator_audit()
{
    return {g_invocations.load(), g_expansions.load(), g_violations.load(), g_peak_fill_ppm.load()};
}

void reset_enumerator_audit()
{
    g_invocations = 0;
    g_expansions = 0;
    g_violations = 0;
    g_peak_fill_ppm = 0;
}

std::uint64_t for_each_short_path(const Graph& g, Vertex u, Vertex v, int max_length, const VertexColoring* rainbow,
                                  const PathVisitor& visit)
{
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v)
        throw std::invalid_argument("path endpoints must differ");
    if (rainbow && rainbow->order() != g.order())
        throw std::invalid_argument("colouring does not cover the graph");

    std::uint64_t expansions = PathSearch(g, u, v, max_length, rainbow, visit).run();
    auto budget = max_length >= 1 ? checked_path_budget(g.order(), max_length - 1) : std::optional<std::uint64_t>{1};
    record(expansions, budget);
    if (budget && expansions > *budget)
        throw std::logic_error("path enumerator expanded " + std::to_string(expansions) +
                               " prefixes, above the budget of " + std::to_string(*budget));
    return expansions;
}

bool is_rainbow_path(const Graph& g, const VertexColoring& c, std::span<const Vertex> p)
{
    if (p.size() < 2)
        throw std::invalid_argument("a path needs at least two vertices");
    if (c.order() != g.order())
        throw std::invalid_argument("colouring does not cover the graph");
    std::vector<std::uint8_t> seen(g.order(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        require_vertex(g, p[i]);
        if (seen[p[i]])
            throw std::invalid_argument("vertex " + std::to_string(p[i]) + " repeats on the path");
        seen[p[i]] = 1;
        if (i > 0 && !g.adjacent(p[i - 1], p[i]))
            throw std::invalid_argument("no edge between " + std::to_string(p[i - 1]) + " and " + std::to_string(p[i]));
    }
    std::vector<Color> internal;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        internal.push_back(c[p[i]]);
    std::sort(internal.begin(), internal.end());
    return std::adjacent_find(internal.begin(), internal.end()) == internal.end();
}

std::optional<PathWitness> exists_rainbow_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v)
{
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v)
        throw std::invalid_argument("rainbow path endpoints must differ");
    if (g.adjacent(u, v))
        return PathWitness{u, v};

    std::optional<PathWitness> best;
    for_each_short_path(g, u, v, c.budget() + 1, &c, [&](std::span<const Vertex> p) {
        best.emplace(p.begin(), p.end());
        return static_cast<int>(p.size()) - 2;  // only strictly shorter paths can replace it
    });
    return best;
}

std::optional<Edge> first_unconnected_pair(const Graph& g, const VertexColoring& c, const PairSet& pairs)
{
    for (const auto& p : pairs.pairs())
        if (!exists_rainbow_path(g, c, p.first, p.second))
            return p;
    return std::nullopt;
}

bool is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c)
{
    if (!is_connected(g))
        throw std::invalid_argument("rainbow vertex-connection is defined for connected graphs only");
    return !first_unconnected_pair(g, c, PairSet::all_pairs(g.order()));
}

bool is_subset_rainbow_vc(const Graph& g, const VertexColoring& c, const PairSet& pairs)
{
    return !first_unconnected_pair(g, c, pairs);
}

}  // namespace rvc
