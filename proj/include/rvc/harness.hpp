#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvc/gadgets.hpp"
#include "rvc/graph.hpp"

namespace rvc {

enum class ClaimId {
    Claim1,           // P_k pairs are far apart once E(H_k) is removed
    Claim2,           // non-pairs are at distance exactly k+1 without E(H_k)
    PathConfinement,  // short P_k paths stay inside H_k
    Proposition1,     // the lifted colouring rainbow-connects G_k
    Claim3,           // subset answer on (G, P) equals rvc(G_k) <= k
    Lemma1,           // k-colourability equals the pendant subset instance
};

enum class Status { Pass, Fail, Skipped };

std::string to_string(ClaimId id);
std::string to_string(Status s);
/// Throws std::invalid_argument on an unknown name.
ClaimId claim_from_string(const std::string& name);

struct Counterexample {
    Edge pair;
    /// Measured value (distance, path length, or decision as 0/1); -1 stands for infinity.
    long long observed = 0;
    long long expected = 0;
    std::string detail;
};

struct ClaimReport {
    ClaimId claim = ClaimId::Claim1;
    std::string instance;
    Status status = Status::Pass;
    std::optional<Counterexample> counterexample;
    std::string note;
};

/// One (G, P, k) point of a sweep.
struct Instance {
    Graph g;
    PairSet pairs;
    int k = 2;

    std::string describe() const;
};

ClaimReport check_claim1(const GadgetGraph& gg);
ClaimReport check_claim2(const GadgetGraph& gg);
ClaimReport check_path_confinement(const GadgetGraph& gg);

/// Proposition 1 on the given gadget for a fixed source colouring c.
/// Works on corrupted gadgets as well (no connectivity requirement).
ClaimReport check_proposition1(const GadgetGraph& gg, const VertexColoring& c);
/// Solves (g, P, k); skipped when the subset instance is a no-instance.
ClaimReport check_proposition1(const Graph& g, const PairSet& pairs, int k);

inline constexpr int kDefaultClaim3Cap = 18;
/// Skipped when |V(G_k)| exceeds `cap`.
ClaimReport check_claim3_exhaustive(const Graph& g, const PairSet& pairs, int k, int cap = kDefaultClaim3Cap);

/// Throws std::invalid_argument for k < 3.
ClaimReport check_lemma1_equivalence(const Graph& g, int k);

// --- instance families ------------------------------------------------------

/// Connected graphs on n vertices, one per isomorphism class, each relabelled
/// to its canonical form. Supports 1 <= n <= 6.
std::vector<Graph> connected_graphs(int n);

/// Every subset of the unordered distinct pairs of 0..n-1 (2^(n(n-1)/2) sets).
std::vector<PairSet> all_pair_sets(int n);

/// Connected graphs with n <= max_n, every pair set, every k in ks.
std::vector<Instance> subset_family(int max_n, std::span<const int> ks);

/// Connected graphs with n <= max_n, empty pair sets, every k in ks.
std::vector<Instance> graph_family(int max_n, std::span<const int> ks);

struct SweepOptions {
    int jobs = 1;
    int claim3_cap = kDefaultClaim3Cap;
};

/// One report per (instance, check), ordered by instance then by check.
std::vector<ClaimReport> run_sweep(std::span<const Instance> family, std::span<const ClaimId> checks,
                                   const SweepOptions& options = {});

struct SweepSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    bool ok() const { return failed == 0; }
};

SweepSummary summarize(std::span<const ClaimReport> reports);

/// Named sweeps: "quick", "core", "claims12", "confinement", "prop1",
/// "claim3", "lemma1". "core" covers every sweep at full size.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument on an unknown suite.
std::vector<ClaimReport> run_suite(const std::string& name, const SweepOptions& options = {});

/// The three fixed k = 2 instances checked exhaustively on both sides:
/// C5 with all pairs, P5 with all pairs, P3 with {(0,2)}.
std::vector<Instance> claim3_instances();

// --- corruptions ------------------------------------------------------------

struct Mutation {
    std::string description;
    GadgetGraph gadget;
};

/// Moves one w-hook so that a pair of P_k gains a detour of length k+1.
/// Only defined for k = 2, 3 (hooks sit on the base layer); returns
/// nullopt otherwise or when no pair shares a vertex with a non-pair.
std::optional<Mutation> mutate_move_hook(const GadgetGraph& gg);

/// Removes every edge at the w rung of the first non-pair.
std::optional<Mutation> mutate_detach_w_gadget(const GadgetGraph& gg);

/// Deterministic family: the two named corruptions above, every single
/// deletion of a gadget (non-H) edge, and `additions` random non-edges
/// drawn with the given seed.
std::vector<Mutation> seeded_mutations(const GadgetGraph& gg, std::uint64_t seed, int additions);

}  // namespace rvc
