#include "rvc/gadgets.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rvc/rainbow.hpp"

namespace rvc {

// --- Lemma 1 ---------------------------------------------------------------

Lemma1Instance lemma1_reduce(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("the colouring reduction expects a connected graph");
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    std::vector<Vertex> pendant(n);
    for (Vertex v = 0; v < n; ++v) {
        pendant[v] = n + v;
        edges.emplace_back(v, n + v);
    }
    std::vector<Edge> pairs;
    for (const auto& e : g.edges())
        pairs.emplace_back(pendant[e.first], pendant[e.second]);
    return {Graph::from_edges(2 * n, edges), PairSet(2 * n, pairs), std::move(pendant)};
}

VertexColoring lemma1_lift(const Graph& g, const VertexColoring& c)
{
    if (c.order() != g.order())
        throw std::invalid_argument("colouring does not cover the graph");
    for (const auto& e : g.edges())
        if (c[e.first] == c[e.second])
            throw std::invalid_argument("colouring is not proper: edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") is monochromatic");
    std::vector<Color> colors = c.colors();
    colors.insert(colors.end(), c.colors().begin(), c.colors().end());
    return {std::move(colors), c.budget()};
}

VertexColoring lemma1_project(const Lemma1Instance& instance, const VertexColoring& cprime)
{
    if (cprime.order() != instance.gprime.order())
        throw std::invalid_argument("colouring does not cover the reduced graph");
    if (auto bad = first_unconnected_pair(instance.gprime, cprime, instance.pairs)) {
        std::ostringstream os;
        os << "pair (" << bad->first << "," << bad->second << ") has no rainbow path";
        throw UnsatisfiedPairError(*bad, os.str());
    }
    const int n = instance.source_order();
    return {std::vector<Color>(cprime.colors().begin(), cprime.colors().begin() + n), cprime.budget()};
}

// --- G_k -------------------------------------------------------------------

std::string GadgetLabel::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case LabelKind::Hub:
        return "u";
    case LabelKind::Rung:
        os << "v_{" << i << "," << level << "}^{(" << alpha << ")}";
        break;
    case LabelKind::W:
        os << "w_{" << i << "," << j << "}^{(" << alpha << ")}";
        break;
    case LabelKind::U:
        os << "u_{" << i << "," << j << "}^{(" << alpha << ")}";
        break;
    case LabelKind::Base:
        os << "v_{" << i << "," << level << "}";
        break;
    }
    return os.str();
}

std::vector<Edge> nonpairs(int n, const PairSet& pairs)
{
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!pairs.contains(i, j))
                out.emplace_back(i, j);
    return out;
}

namespace {

using Rung = std::array<Vertex, 2>;

class Builder {
public:
    Vertex add(GadgetLabel label)
    {
        labels_.push_back(label);
        return static_cast<Vertex>(labels_.size()) - 1;
    }

    void connect(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

    Rung add_rung(LabelKind kind, int i, int j, int level)
    {
        return {add({kind, i, j, level, 1}), add({kind, i, j, level, 2})};
    }

    std::vector<Vertex> add_base(int n, int k)
    {
        std::vector<Vertex> base(n);
        for (int i = 0; i < n; ++i)
            base[i] = add({LabelKind::Base, i, -1, k, 0});
        return base;
    }

    GadgetGraph finish(const Graph& g, const PairSet& pairs, int k, std::vector<Vertex> base)
    {
        std::vector<Edge> h;
        for (const auto& e : g.edges()) {
            h.emplace_back(base[e.first], base[e.second]);
            connect(base[e.first], base[e.second]);
        }
        std::sort(h.begin(), h.end());
        std::vector<Edge> pk;
        for (const auto& p : pairs.pairs())
            pk.emplace_back(base[p.first], base[p.second]);
        const int order = static_cast<int>(labels_.size());
        return {Graph::from_edges(order, edges_), k, std::move(labels_), std::move(base), PairSet(order, pk),
                std::move(h)};
    }

private:
    std::vector<GadgetLabel> labels_;
    std::vector<Edge> edges_;
};

GadgetGraph build_level2(const Graph& g, const PairSet& pairs)
{
    const int n = g.order();
    const auto np = nonpairs(n, pairs);
    Builder b;

    Vertex hub = b.add({LabelKind::Hub, -1, -1, -1, 0});
    std::vector<Rung> v0(n);
    for (int i = 0; i < n; ++i)
        v0[i] = b.add_rung(LabelKind::Rung, i, -1, 0);
    std::vector<Rung> w(np.size());
    for (std::size_t t = 0; t < np.size(); ++t)
        w[t] = b.add_rung(LabelKind::W, np[t].first, np[t].second, 0);
    auto base = b.add_base(n, 2);

    for (const auto& r : v0) {
        b.connect(hub, r[0]);
        b.connect(hub, r[1]);
    }
    for (const auto& r : w) {
        b.connect(hub, r[0]);
        b.connect(hub, r[1]);
    }
    for (const auto& r : v0)
        b.connect(r[0], r[1]);
    for (const auto& r : w)
        b.connect(r[0], r[1]);
    for (int i = 0; i < n; ++i) {
        b.connect(base[i], v0[i][0]);
        b.connect(base[i], v0[i][1]);
    }
    for (std::size_t t = 0; t < np.size(); ++t) {
        b.connect(base[np[t].first], w[t][0]);
        b.connect(base[np[t].second], w[t][1]);
    }
    return b.finish(g, pairs, 2, std::move(base));
}

GadgetGraph build_level3(const Graph& g, const PairSet& pairs)
{
    const int n = g.order();
    const auto np = nonpairs(n, pairs);
    Builder b;

    std::vector<Rung> v0(n), v1(n);
    std::vector<Rung> u(np.size()), w(np.size());
    for (int i = 0; i < n; ++i)
        v0[i] = b.add_rung(LabelKind::Rung, i, -1, 0);
    for (std::size_t t = 0; t < np.size(); ++t)
        u[t] = b.add_rung(LabelKind::U, np[t].first, np[t].second, 0);
    for (int i = 0; i < n; ++i)
        v1[i] = b.add_rung(LabelKind::Rung, i, -1, 1);
    for (std::size_t t = 0; t < np.size(); ++t)
        w[t] = b.add_rung(LabelKind::W, np[t].first, np[t].second, 1);
    auto base = b.add_base(n, 3);

    // Layer 0 is a clique.
    std::vector<Vertex> layer0;
    for (const auto& r : v0)
        layer0.insert(layer0.end(), r.begin(), r.end());
    for (const auto& r : u)
        layer0.insert(layer0.end(), r.begin(), r.end());
    for (std::size_t a = 0; a < layer0.size(); ++a)
        for (std::size_t c = a + 1; c < layer0.size(); ++c)
            b.connect(layer0[a], layer0[c]);

    for (int i = 0; i < n; ++i)
        for (Vertex x : v0[i])
            for (Vertex y : v1[i])
                b.connect(x, y);
    for (std::size_t t = 0; t < np.size(); ++t)
        for (Vertex x : u[t])
            for (Vertex y : w[t])
                b.connect(x, y);
    for (const auto& r : v1)
        b.connect(r[0], r[1]);
    for (int i = 0; i < n; ++i) {
        b.connect(base[i], v1[i][0]);
        b.connect(base[i], v1[i][1]);
    }
    for (std::size_t t = 0; t < np.size(); ++t) {
        b.connect(base[np[t].first], w[t][0]);
        b.connect(base[np[t].second], w[t][1]);
    }
    return b.finish(g, pairs, 3, std::move(base));
}

/// Splits every base vertex of G_{k-2} into a rung and hangs a new base
/// layer below it.
GadgetGraph build_inductive(const Graph& g, const PairSet& pairs, int k)
{
    const GadgetGraph prev = build_gadget(g, pairs, k - 2);
    const int n = g.order();
    Builder b;

    std::vector<Vertex> remap(prev.graph.order(), -1);
    std::vector<int> base_index(prev.graph.order(), -1);
    for (int i = 0; i < n; ++i)
        base_index[prev.base[i]] = i;
    for (Vertex x = 0; x < prev.graph.order(); ++x)
        if (base_index[x] < 0)
            remap[x] = b.add(prev.labels[x]);

    std::vector<Rung> split(n);
    for (int i = 0; i < n; ++i)
        split[i] = b.add_rung(LabelKind::Rung, i, -1, k - 2);
    auto base = b.add_base(n, k);

    for (const auto& e : prev.graph.edges()) {
        const int bi = base_index[e.first];
        const int bj = base_index[e.second];
        if (bi >= 0 && bj >= 0)
            continue;  // E(H_{k-2}) is dropped
        if (bi < 0 && bj < 0) {
            b.connect(remap[e.first], remap[e.second]);
            continue;
        }
        const int i = bi >= 0 ? bi : bj;
        const Vertex x = bi >= 0 ? e.second : e.first;
        if (prev.labels[x].level != k - 4)
            throw std::logic_error("base vertex of G_" + std::to_string(k - 2) + " attached outside layer " +
                                   std::to_string(k - 4));
        b.connect(remap[x], split[i][0]);
        b.connect(remap[x], split[i][1]);
    }
    for (int i = 0; i < n; ++i) {
        b.connect(split[i][0], split[i][1]);
        b.connect(base[i], split[i][0]);
        b.connect(base[i], split[i][1]);
    }
    return b.finish(g, pairs, k, std::move(base));
}

/// Colour of a gadget vertex under c_k, following the recursive definition
/// c_k -> c_{k-2} -> ... -> c_2 or c_3.
Color lifted_color(const GadgetLabel& label, int k, const VertexColoring& c)
{
    if (label.kind == LabelKind::Base)
        return c[label.i];
    if (k == 2)
        return label.kind == LabelKind::Hub ? 1 : label.alpha;
    if (k == 3) {
        if (label.level == 0)
            return label.alpha;  // v_{i,0} and u_{i,j}
        return label.alpha + 1;  // v_{i,1} and w_{i,j}
    }
    if (label.kind == LabelKind::Rung && label.level == k - 2)
        return label.alpha == 1 ? k - 1 : k;
    if (k % 2 == 0) {
        if (label.kind == LabelKind::Hub)
            return k - 1;
    } else if (label.level == 0 && label.alpha == 2 && (label.kind == LabelKind::Rung || label.kind == LabelKind::U)) {
        return k - 1;
    }
    return lifted_color(label, k - 2, c);
}

}  // namespace

GadgetGraph build_gadget(const Graph& g, const PairSet& pairs, int k)
{
    if (k < 2)
        throw std::invalid_argument("gadget level must be at least 2");
    if (!pairs.empty() && pairs.order() != g.order())
        throw std::invalid_argument("pair set refers to vertices outside the graph");
    if (!is_connected(g))
        throw std::invalid_argument("the gadget construction expects a connected graph");
    if (k == 2)
        return build_level2(g, pairs);
    if (k == 3)
        return build_level3(g, pairs);
    return build_inductive(g, pairs, k);
}

VertexColoring lift_coloring(const GadgetGraph& gg, const VertexColoring& c)
{
    if (c.order() != gg.source_order())
        throw std::invalid_argument("colouring does not cover the source graph");
    for (Vertex v = 0; v < c.order(); ++v)
        if (c[v] > gg.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " uses colour " + std::to_string(c[v]) +
                                        " above k=" + std::to_string(gg.k));
    std::vector<Color> colors(gg.graph.order());
    for (Vertex x = 0; x < gg.graph.order(); ++x)
        colors[x] = lifted_color(gg.labels[x], gg.k, c);
    return {std::move(colors), gg.k};
}

VertexColoring lift_coloring(const Graph& g, const PairSet& pairs, int k, const VertexColoring& c)
{
    return lift_coloring(build_gadget(g, pairs, k), c);
}

VertexColoring project_coloring(const GadgetGraph& gg, const VertexColoring& ck)
{
    if (ck.order() != gg.graph.order())
        throw std::invalid_argument("colouring does not cover the gadget");
    std::vector<Color> colors(gg.source_order());
    for (int i = 0; i < gg.source_order(); ++i)
        colors[i] = ck[gg.base[i]];
    return {std::move(colors), ck.budget()};
}

Graph without_base_edges(const GadgetGraph& gg)
{
    return remove_edges(gg.graph, gg.base_edges);
}

}  // namespace rvc
