#pragma once

#include <cstdint>
#include <optional>

#include "rvc/graph.hpp"

namespace rvc {

struct SolveResult {
    bool decision = false;
    /// Present iff decision is yes; always re-verified by the checker.
    std::optional<VertexColoring> witness;
    std::uint64_t nodes_explored = 0;
};

struct SolveOptions {
    /// Workers for the top-level branching. Results do not depend on it.
    int jobs = 1;
};

/// Is there a colouring with colours 1..k under which every pair of `pairs`
/// is joined by a rainbow path? Throws std::invalid_argument on a
/// disconnected graph or k < 1.
SolveResult decide_subset_rvc(const Graph& g, const PairSet& pairs, int k, const SolveOptions& options = {});

/// rvc(g) <= k. k == 0 is the completeness test.
SolveResult decide_rvc_le_k(const Graph& g, int k, const SolveOptions& options = {});

struct RvcResult {
    int value = 0;
    /// Colouring achieving `value` colours (constant 1 when value is 0).
    VertexColoring witness;
    std::uint64_t nodes_explored = 0;
};

/// Smallest k with rvc(g) <= k, searching upward from diam(g) - 1.
RvcResult rvc_exact(const Graph& g, const SolveOptions& options = {});

/// Proper k-vertex-colouring decision.
SolveResult chromatic_decision(const Graph& g, int k);

int chromatic_number(const Graph& g);

}  // namespace rvc
