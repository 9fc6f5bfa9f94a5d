#pragma once

// Test-only reference implementations. Nothing here calls into the library
// except to read a Graph's edge list, so agreement with the library is a
// real cross-check rather than a tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rvc/gadgets.hpp"
#include "rvc/graph.hpp"

namespace oracle {

struct Adjacency {
    int n = 0;
    std::vector<std::vector<char>> a;

    bool operator()(int u, int v) const { return a[u][v] != 0; }
};

inline Adjacency adjacency(const rvc::Graph& g)
{
    Adjacency adj{g.order(), std::vector<std::vector<char>>(g.order(), std::vector<char>(g.order(), 0))};
    for (const auto& e : g.edges())
        adj.a[e.first][e.second] = adj.a[e.second][e.first] = 1;
    return adj;
}

inline constexpr int kUnreachable = 1 << 28;

/// All-pairs distances by repeated relaxation until a fixed point.
inline std::vector<std::vector<int>> relaxation_distances(const rvc::Graph& g)
{
    const auto adj = adjacency(g);
    const int n = adj.n;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                if (adj(u, w))
                    for (int v = 0; v < n; ++v)
                        if (d[w][v] + 1 < d[u][v]) {
                            d[u][v] = d[w][v] + 1;
                            changed = true;
                        }
    }
    return d;
}

/// Every simple u-v path with at most max_length edges, no pruning beyond
/// the length cap.
inline void simple_paths(const Adjacency& adj, int u, int v, int max_length,
                         const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> path{u};
    std::vector<char> used(adj.n, 0);
    used[u] = 1;
    std::function<void()> rec = [&] {
        const int x = path.back();
        if (x == v) {
            visit(path);
            return;
        }
        if (static_cast<int>(path.size()) - 1 >= max_length)
            return;
        for (int y = 0; y < adj.n; ++y)
            if (adj(x, y) && !used[y]) {
                used[y] = 1;
                path.push_back(y);
                rec();
                path.pop_back();
                used[y] = 0;
            }
    };
    rec();
}

/// Is there a simple u-v path whose internal vertices carry distinct
/// colours? No length cap; prefixes with a repeated internal colour are cut
/// because no extension can repair them.
inline bool rainbow_pair(const Adjacency& adj, const std::vector<int>& colors, int u, int v)
{
    if (adj(u, v))
        return true;
    std::vector<char> used(adj.n, 0);
    std::vector<int> seen_color;
    used[u] = 1;
    std::function<bool(int)> rec = [&](int x) {
        for (int y = 0; y < adj.n; ++y) {
            if (!adj(x, y) || used[y])
                continue;
            if (y == v)
                return true;
            const int col = colors[y];
            if (static_cast<int>(seen_color.size()) <= col)
                seen_color.resize(col + 1, 0);
            if (seen_color[col])
                continue;
            seen_color[col] = 1;
            used[y] = 1;
            const bool ok = rec(y);
            used[y] = 0;
            seen_color[col] = 0;
            if (ok)
                return true;
        }
        return false;
    };
    return rec(u);
}

inline bool rainbow_all(const rvc::Graph& g, const std::vector<int>& colors)
{
    const auto adj = adjacency(g);
    for (int u = 0; u < adj.n; ++u)
        for (int v = u + 1; v < adj.n; ++v)
            if (!rainbow_pair(adj, colors, u, v))
                return false;
    return true;
}

/// Calls visit on each of the k^n colourings (colours 1..k).
inline void for_each_coloring(int n, int k, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> c(n, 1);
    while (true) {
        if (!visit(c))
            return;
        int i = 0;
        while (i < n && c[i] == k)
            c[i++] = 1;
        if (i == n)
            return;
        ++c[i];
    }
}

/// Index of the unordered pair (a, b), a < b, in row-major order.
inline int pair_index(int n, int a, int b)
{
    int idx = 0;
    for (int i = 0; i < a; ++i)
        idx += n - 1 - i;
    return idx + (b - a - 1);
}

/// Bitmask over unordered pairs of the pairs rainbow-connected by c.
inline std::uint64_t satisfied_mask(const Adjacency& adj, const std::vector<int>& c)
{
    std::uint64_t mask = 0;
    for (int a = 0; a < adj.n; ++a)
        for (int b = a + 1; b < adj.n; ++b)
            if (rainbow_pair(adj, c, a, b))
                mask |= std::uint64_t{1} << pair_index(adj.n, a, b);
    return mask;
}

/// Distinct satisfied masks over all k^n colourings.
inline std::vector<std::uint64_t> achievable_masks(const rvc::Graph& g, int k)
{
    const auto adj = adjacency(g);
    std::vector<std::uint64_t> masks;
    for_each_coloring(g.order(), k, [&](const std::vector<int>& c) {
        masks.push_back(satisfied_mask(adj, c));
        return true;
    });
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

inline std::uint64_t mask_of(const rvc::PairSet& p)
{
    std::uint64_t m = 0;
    for (const auto& e : p.pairs())
        m |= std::uint64_t{1} << pair_index(p.order(), e.first, e.second);
    return m;
}

inline bool subset_brute(const rvc::Graph& g, const rvc::PairSet& p, int k)
{
    const auto adj = adjacency(g);
    bool found = false;
    for_each_coloring(g.order(), k, [&](const std::vector<int>& c) {
        for (const auto& e : p.pairs())
            if (!rainbow_pair(adj, c, e.first, e.second))
                return true;
        found = true;
        return false;
    });
    return found;
}

inline int rvc_brute(const rvc::Graph& g)
{
    const int n = g.order();
    const auto adj = adjacency(g);
    bool complete = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            complete = complete && adj(u, v);
    if (complete)
        return 0;
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_coloring(n, k, [&](const std::vector<int>& c) {
            found = rainbow_all(g, c);
            return !found;
        });
        if (found)
            return k;
    }
}

inline int chromatic_brute(const rvc::Graph& g)
{
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_coloring(g.order(), k, [&](const std::vector<int>& c) {
            bool proper = true;
            for (const auto& e : g.edges())
                proper = proper && c[e.first] != c[e.second];
            found = proper;
            return !found;
        });
        if (found)
            return k;
    }
}

/// Vertex count of G_k from the family definitions, with q non-pairs.
inline long gadget_vertices(long n, long q, int k)
{
    if (k == 2)
        return 1 + 2 * n + 2 * q + n;
    if (k == 3)
        return (2 * n + 2 * q) + (2 * n + 2 * q) + n;
    return gadget_vertices(n, q, k - 2) + 2 * n;
}

/// Edge count of G_k from the family definitions, with m source edges and
/// q non-pairs. Splitting a base vertex doubles its edges into the layer
/// above; at k = 4, 5 that includes the hooks.
inline long gadget_edges(long n, long m, long q, int k)
{
    if (k == 2)
        return (2 * n + 2 * q) + n + q + 2 * n + 2 * q + m;
    if (k == 3) {
        const long s = 2 * n + 2 * q;
        return s * (s - 1) / 2 + 4 * n + 4 * q + n + 2 * n + 2 * q + m;
    }
    const long rewired = (k <= 5) ? 2 * n + 2 * q : 2 * n;
    return gadget_edges(n, m, q, k - 2) - m + rewired + n + 2 * n + m;
}

/// Closed-form colour of an even-k lift.
inline int even_lift(const rvc::GadgetLabel& l, int k, const std::vector<int>& c)
{
    switch (l.kind) {
    case rvc::LabelKind::Hub:
        return k - 1;
    case rvc::LabelKind::Base:
        return c[l.i];
    case rvc::LabelKind::W:
        return l.alpha;
    case rvc::LabelKind::Rung:
        return l.level + l.alpha;
    case rvc::LabelKind::U:
        break;
    }
    return -1;
}

}  // namespace oracle
