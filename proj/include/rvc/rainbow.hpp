#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// Vertex sequence u = p0, p1, ..., pl = v. Internal vertices are p1..p(l-1).
using PathWitness = std::vector<Vertex>;

/// Number of u-v paths of length at most k+1 admitted by the certificate
/// check: sum over l = 1..k+1 of n^(l-1). Throws std::overflow_error if the
/// value does not fit in 64 bits, std::invalid_argument on n < 1 or k < 0.
std::uint64_t path_budget(int n, int k);

/// Same as path_budget but returns nullopt on overflow.
std::optional<std::uint64_t> checked_path_budget(int n, int k);

/// Process-wide counters of the bounded path enumerator. Every invocation
/// compares its expansion count with path_budget(n, max_length - 1).
struct EnumeratorAudit {
    std::uint64_t invocations = 0;
    std::uint64_t expansions = 0;
    std::uint64_t violations = 0;
    /// Largest expansions/budget ratio seen, in parts per million.
    std::uint64_t peak_fill_ppm = 0;
};

EnumeratorAudit enumerator_audit();
void reset_enumerator_audit();

/// Called with each path found; returns the length bound for the rest of
/// the search. Returning the current bound keeps enumerating everything,
/// returning a smaller value narrows the search, returning 0 stops it.
using PathVisitor = std::function<int(std::span<const Vertex> path)>;

/// Depth-first enumeration of simple u-v paths of length <= max_length in
/// lexicographic order of vertex sequences. With `rainbow` set, prefixes
/// whose internal vertices repeat a colour are pruned. Each prefix is
/// expanded at most once; the expansion count is returned and audited.
std::uint64_t for_each_short_path(const Graph& g, Vertex u, Vertex v, int max_length, const VertexColoring* rainbow,
                                  const PathVisitor& visit);

/// True iff the internal vertices of p have pairwise distinct colours.
/// Throws std::invalid_argument if p is not a path of g.
bool is_rainbow_path(const Graph& g, const VertexColoring& c, std::span<const Vertex> p);

/// Shortest rainbow u-v path of length <= c.budget() + 1, ties broken by
/// lexicographically smallest vertex sequence. Throws on u == v.
std::optional<PathWitness> exists_rainbow_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v);

/// First pair (in sorted order) without a rainbow witness. No connectivity
/// requirement: pairs in different components simply fail.
std::optional<Edge> first_unconnected_pair(const Graph& g, const VertexColoring& c, const PairSet& pairs);

/// Throws std::invalid_argument on disconnected g.
bool is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c);

bool is_subset_rainbow_vc(const Graph& g, const VertexColoring& c, const PairSet& pairs);

}  // namespace rvc
