#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

// ---------------------------------------------------------------------------
// Reduction from proper k-colouring to the k-subset problem: every vertex v
// of G gets a pendant x_v, and each edge (u, v) of G becomes the pair
// (x_u, x_v). Pendants are numbered n..2n-1, so x_v = n + v.
// ---------------------------------------------------------------------------

struct Lemma1Instance {
    Graph gprime;
    PairSet pairs;
    std::vector<Vertex> pendant_of;

    int source_order() const { return static_cast<int>(pendant_of.size()); }
};

/// A pair that the supplied colouring fails to rainbow-connect.
class UnsatisfiedPairError : public std::runtime_error {
public:
    UnsatisfiedPairError(Edge pair, const std::string& what) : std::runtime_error(what), pair_(pair) {}
    Edge pair() const { return pair_; }

private:
    Edge pair_;
};

/// Throws std::invalid_argument on a disconnected graph.
Lemma1Instance lemma1_reduce(const Graph& g);

/// c'(x_v) = c'(v) = c(v). Throws std::invalid_argument if c is not proper on g.
VertexColoring lemma1_lift(const Graph& g, const VertexColoring& c);

/// Restriction of c' to the original vertices. Throws UnsatisfiedPairError
/// naming the first pair of the instance that c' leaves unconnected.
VertexColoring lemma1_project(const Lemma1Instance& instance, const VertexColoring& cprime);

// ---------------------------------------------------------------------------
// Layered gadget G_k whose rvc <= k question encodes the k-subset instance
// (G, P). Built explicitly for k = 2, 3 and by splitting base vertices of
// G_{k-2} for k >= 4.
// ---------------------------------------------------------------------------

enum class LabelKind {
    Hub,   // u, even k only
    Rung,  // v_{i,l}^{(a)}
    W,     // w_{i,j}^{(a)}, one rung per non-pair
    U,     // u_{i,j}^{(a)}, odd k only
    Base,  // v_{i,k}
};

struct GadgetLabel {
    LabelKind kind = LabelKind::Hub;
    int i = -1;
    int j = -1;
    /// Layer index: 0..k for gadget vertices, k for the base layer, -1 for the hub.
    int level = -1;
    int alpha = 0;

    /// v_{i,l}^{(a)} style name with 0-based source indices.
    std::string to_string() const;
    friend bool operator==(const GadgetLabel&, const GadgetLabel&) = default;
};

struct GadgetGraph {
    Graph graph;
    int k = 2;
    std::vector<GadgetLabel> labels;
    /// base[i] is the vertex v_{i,k}.
    std::vector<Vertex> base;
    /// P transported onto the base layer.
    PairSet pairs_k;
    /// E(H_k): the copy of E(G) on the base layer.
    std::vector<Edge> base_edges;

    int source_order() const { return static_cast<int>(base.size()); }
};

/// Unordered distinct pairs of 0..n-1 that are not in `pairs`.
std::vector<Edge> nonpairs(int n, const PairSet& pairs);

/// Throws std::invalid_argument on k < 2, a disconnected g, or pairs over
/// a different vertex count.
GadgetGraph build_gadget(const Graph& g, const PairSet& pairs, int k);

/// The colouring c_k of G_k induced by a colouring c of G. Throws
/// std::invalid_argument when c has colours above k or the wrong order.
VertexColoring lift_coloring(const GadgetGraph& gg, const VertexColoring& c);
VertexColoring lift_coloring(const Graph& g, const PairSet& pairs, int k, const VertexColoring& c);

/// c(v_i) = c_k(v_{i,k}).
VertexColoring project_coloring(const GadgetGraph& gg, const VertexColoring& ck);

/// G_k with the base-layer edges removed.
Graph without_base_edges(const GadgetGraph& gg);

}  // namespace rvc
