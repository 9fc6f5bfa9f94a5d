#include "rvc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rvc/rainbow.hpp"
#include "rvc/solver.hpp"

namespace rvc {

namespace {

long long as_observed(int d)
{
    return d == kInfinity ? -1 : d;
}

std::string join_path(std::span<const Vertex> p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "-" : "") << p[i];
    return os.str();
}

std::string describe_gadget(const GadgetGraph& gg)
{
    std::ostringstream os;
    os << "G_" << gg.k << " n=" << gg.source_order() << " |V|=" << gg.graph.order() << " |E|=" << gg.graph.size()
       << " |P_k|=" << gg.pairs_k.size();
    return os.str();
}

ClaimReport fail(ClaimReport r, Edge pair, long long observed, long long expected, std::string detail)
{
    r.status = Status::Fail;
    r.counterexample = Counterexample{pair, observed, expected, std::move(detail)};
    return r;
}

}  // namespace

std::string to_string(ClaimId id)
{
    switch (id) {
    case ClaimId::Claim1:
        return "claim1";
    case ClaimId::Claim2:
        return "claim2";
    case ClaimId::PathConfinement:
        return "confinement";
    case ClaimId::Proposition1:
        return "prop1";
    case ClaimId::Claim3:
        return "claim3";
    case ClaimId::Lemma1:
        return "lemma1";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "?";
}

ClaimId claim_from_string(const std::string& name)
{
    for (ClaimId id : {ClaimId::Claim1, ClaimId::Claim2, ClaimId::PathConfinement, ClaimId::Proposition1,
                       ClaimId::Claim3, ClaimId::Lemma1})
        if (to_string(id) == name)
            return id;
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::string Instance::describe() const
{
    std::ostringstream os;
    os << "n=" << g.order() << " E=[";
    for (std::size_t t = 0; t < g.edges().size(); ++t)
        os << (t ? "," : "") << "[" << g.edges()[t].first << "," << g.edges()[t].second << "]";
    os << "] P=[";
    for (std::size_t t = 0; t < pairs.pairs().size(); ++t)
        os << (t ? "," : "") << "[" << pairs.pairs()[t].first << "," << pairs.pairs()[t].second << "]";
    os << "] k=" << k;
    return os.str();
}

// --- gadget checks ----------------------------------------------------------

ClaimReport check_claim1(const GadgetGraph& gg)
{
    ClaimReport r{ClaimId::Claim1, describe_gadget(gg)};
    const Graph stripped = without_base_edges(gg);
    for (const auto& p : gg.pairs_k.pairs()) {
        const int d = distance(stripped, p.first, p.second);
        if (d < gg.k + 2)
            return fail(std::move(r), p, as_observed(d), gg.k + 2, "distance in G_k - E(H_k) below k+2");
    }
    return r;
}

ClaimReport check_claim2(const GadgetGraph& gg)
{
    ClaimReport r{ClaimId::Claim2, describe_gadget(gg)};
    const Graph stripped = without_base_edges(gg);
    for (int i = 0; i < gg.source_order(); ++i) {
        const auto dist = distances_from(stripped, gg.base[i]);
        for (int j = i + 1; j < gg.source_order(); ++j) {
            if (gg.pairs_k.contains(gg.base[i], gg.base[j]))
                continue;
            const int d = dist[gg.base[j]];
            if (d != gg.k + 1)
                return fail(std::move(r), Edge(gg.base[i], gg.base[j]), as_observed(d), gg.k + 1,
                            "non-pair distance in G_k - E(H_k) differs from k+1");
        }
    }
    return r;
}

ClaimReport check_path_confinement(const GadgetGraph& gg)
{
    ClaimReport r{ClaimId::PathConfinement, describe_gadget(gg)};
    std::vector<std::uint8_t> in_base(gg.graph.order(), 0);
    for (Vertex b : gg.base)
        in_base[b] = 1;
    for (const auto& p : gg.pairs_k.pairs()) {
        std::optional<PathWitness> escape;
        for_each_short_path(gg.graph, p.first, p.second, gg.k + 1, nullptr, [&](std::span<const Vertex> path) {
            if (std::all_of(path.begin(), path.end(), [&](Vertex x) { return in_base[x] != 0; }))
                return gg.k + 1;
            escape.emplace(path.begin(), path.end());
            return 0;
        });
        if (escape)
            return fail(std::move(r), p, static_cast<long long>(escape->size()) - 1, gg.k + 1,
                        "path " + join_path(*escape) + " leaves H_k");
    }
    return r;
}

ClaimReport check_proposition1(const GadgetGraph& gg, const VertexColoring& c)
{
    ClaimReport r{ClaimId::Proposition1, describe_gadget(gg)};
    const VertexColoring ck = lift_coloring(gg, c);
    if (auto bad = first_unconnected_pair(gg.graph, ck, PairSet::all_pairs(gg.graph.order())))
        return fail(std::move(r), *bad, 0, 1,
                    "no rainbow path between " + gg.labels[bad->first].to_string() + " and " +
                        gg.labels[bad->second].to_string() + " under the lifted colouring");
    return r;
}

ClaimReport check_proposition1(const Graph& g, const PairSet& pairs, int k)
{
    const SolveResult s = decide_subset_rvc(g, pairs, k);
    if (!s.decision) {
        ClaimReport r{ClaimId::Proposition1, Instance{g, pairs, k}.describe(), Status::Skipped};
        r.note = "subset instance has no k-colouring";
        return r;
    }
    ClaimReport r = check_proposition1(build_gadget(g, pairs, k), *s.witness);
    r.instance = Instance{g, pairs, k}.describe();
    return r;
}

ClaimReport check_claim3_exhaustive(const Graph& g, const PairSet& pairs, int k, int cap)
{
    ClaimReport r{ClaimId::Claim3, Instance{g, pairs, k}.describe()};
    const GadgetGraph gg = build_gadget(g, pairs, k);
    if (gg.graph.order() > cap) {
        r.status = Status::Skipped;
        r.note = "gadget has " + std::to_string(gg.graph.order()) + " vertices, above the cap of " + std::to_string(cap);
        return r;
    }
    const SolveResult source = decide_subset_rvc(g, pairs, k);
    const SolveResult gadget = decide_rvc_le_k(gg.graph, k);
    r.note = std::string("subset ") + (source.decision ? "yes" : "no") + ", rvc(G_k)<=k " +
             (gadget.decision ? "yes" : "no") + ", |V(G_k)|=" + std::to_string(gg.graph.order());
    if (source.decision != gadget.decision)
        return fail(std::move(r), Edge(), gadget.decision, source.decision, "decisions differ on the two sides");
    if (gadget.decision) {
        const VertexColoring c = project_coloring(gg, *gadget.witness);
        if (auto bad = first_unconnected_pair(g, c, pairs))
            return fail(std::move(r), *bad, 0, 1, "projected colouring leaves the pair unconnected");
    }
    return r;
}

ClaimReport check_lemma1_equivalence(const Graph& g, int k)
{
    if (k < 3)
        throw std::invalid_argument("the colouring reduction is checked for k >= 3 only");
    ClaimReport r{ClaimId::Lemma1, Instance{g, PairSet(), k}.describe()};
    const SolveResult proper = chromatic_decision(g, k);
    const Lemma1Instance inst = lemma1_reduce(g);
    const SolveResult subset = decide_subset_rvc(inst.gprime, inst.pairs, k);
    r.note = std::string("colourable ") + (proper.decision ? "yes" : "no") + ", subset " +
             (subset.decision ? "yes" : "no");
    if (proper.decision != subset.decision)
        return fail(std::move(r), Edge(), subset.decision, proper.decision, "decisions differ on the two sides");
    if (subset.decision) {
        const VertexColoring c = lemma1_project(inst, *subset.witness);
        for (const auto& e : g.edges())
            if (c[e.first] == c[e.second])
                return fail(std::move(r), e, c[e.first], -1, "projected colouring is not proper");
    }
    return r;
}

// --- families ---------------------------------------------------------------

namespace {

std::vector<Graph> enumerate_connected(int n)
{
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    std::vector<int> slot_of(static_cast<std::size_t>(n) * n, -1);
    for (int s = 0; s < m; ++s) {
        slot_of[static_cast<std::size_t>(slots[s].first) * n + slots[s].second] = s;
        slot_of[static_cast<std::size_t>(slots[s].second) * n + slots[s].first] = s;
    }

    // Image of each slot under each vertex permutation.
    std::vector<std::vector<int>> images;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> img(m);
        for (int s = 0; s < m; ++s)
            img[s] = slot_of[static_cast<std::size_t>(perm[slots[s].first]) * n + perm[slots[s].second]];
        images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto to_graph = [&](std::uint32_t mask) {
        std::vector<Edge> edges;
        for (int s = 0; s < m; ++s)
            if (mask >> s & 1U)
                edges.push_back(slots[s]);
        return Graph::from_edges(n, edges);
    };

    std::vector<std::uint32_t> canon;
    std::vector<std::uint8_t> seen(std::size_t{1} << m, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (seen[mask])
            continue;
        std::uint32_t best = mask;
        for (const auto& img : images) {
            std::uint32_t out = 0;
            for (int s = 0; s < m; ++s)
                if (mask >> s & 1U)
                    out |= std::uint32_t{1} << img[s];
            seen[out] = 1;
            best = std::min(best, out);
        }
        if (is_connected(to_graph(best)))
            canon.push_back(best);
    }
    std::sort(canon.begin(), canon.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<Graph> out;
    for (auto mask : canon)
        out.push_back(to_graph(mask));
    return out;
}

}  // namespace

std::vector<Graph> connected_graphs(int n)
{
    if (n < 1 || n > 6)
        throw std::invalid_argument("connected graph enumeration supports 1 <= n <= 6");
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_connected(n)).first;
    return it->second;
}

std::vector<PairSet> all_pair_sets(int n)
{
    const auto all = PairSet::all_pairs(n).pairs();
    const std::size_t m = all.size();
    if (m > 20)
        throw std::invalid_argument("too many pair sets to enumerate");
    std::vector<PairSet> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<Edge> chosen;
        for (std::size_t s = 0; s < m; ++s)
            if (mask >> s & 1U)
                chosen.push_back(all[s]);
        out.emplace_back(n, chosen);
    }
    return out;
}

std::vector<Instance> subset_family(int max_n, std::span<const int> ks)
{
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : connected_graphs(n))
            for (const auto& p : all_pair_sets(n))
                for (int k : ks)
                    out.push_back({g, p, k});
    return out;
}

std::vector<Instance> graph_family(int max_n, std::span<const int> ks)
{
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : connected_graphs(n))
            for (int k : ks)
                out.push_back({g, PairSet(n, std::span<const Edge>{}), k});
    return out;
}

// --- sweeps -----------------------------------------------------------------

namespace {

std::vector<ClaimReport> run_instance(const Instance& inst, std::span<const ClaimId> checks, const SweepOptions& opt)
{
    std::optional<GadgetGraph> gadget;
    auto get_gadget = [&]() -> const GadgetGraph& {
        if (!gadget)
            gadget = build_gadget(inst.g, inst.pairs, inst.k);
        return *gadget;
    };

    std::vector<ClaimReport> out;
    for (ClaimId id : checks) {
        ClaimReport r{id, inst.describe()};
        try {
            switch (id) {
            case ClaimId::Claim1:
                r = check_claim1(get_gadget());
                break;
            case ClaimId::Claim2:
                r = check_claim2(get_gadget());
                break;
            case ClaimId::PathConfinement:
                r = check_path_confinement(get_gadget());
                break;
            case ClaimId::Proposition1: {
                const SolveResult s = decide_subset_rvc(inst.g, inst.pairs, inst.k);
                if (s.decision) {
                    r = check_proposition1(get_gadget(), *s.witness);
                } else {
                    r.status = Status::Skipped;
                    r.note = "subset instance has no k-colouring";
                }
                break;
            }
            case ClaimId::Claim3:
                r = check_claim3_exhaustive(inst.g, inst.pairs, inst.k, opt.claim3_cap);
                break;
            case ClaimId::Lemma1:
                if (inst.k < 3) {
                    r.status = Status::Skipped;
                    r.note = "colouring reduction is checked for k >= 3";
                } else {
                    r = check_lemma1_equivalence(inst.g, inst.k);
                }
                break;
            }
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.note = std::string("exception: ") + e.what();
        }
        r.instance = inst.describe();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<ClaimReport> run_sweep(std::span<const Instance> family, std::span<const ClaimId> checks,
                                   const SweepOptions& options)
{
    std::vector<std::vector<ClaimReport>> slots(family.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < family.size(); t = next++)
            slots[t] = run_instance(family[t], checks, options);
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }

    std::vector<ClaimReport> out;
    for (auto& s : slots)
        for (auto& r : s)
            out.push_back(std::move(r));
    return out;
}

SweepSummary summarize(std::span<const ClaimReport> reports)
{
    SweepSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
        case Status::Pass:
            ++s.passed;
            break;
        case Status::Fail:
            ++s.failed;
            break;
        case Status::Skipped:
            ++s.skipped;
            break;
        }
    }
    return s;
}

std::vector<Instance> claim3_instances()
{
    return {
        {cycle_graph(5), PairSet::all_pairs(5), 2},
        {path_graph(5), PairSet::all_pairs(5), 2},
        {path_graph(3), PairSet(3, {{0, 2}}), 2},
    };
}

std::vector<std::string> suite_names()
{
    return {"quick", "core", "claims12", "confinement", "prop1", "claim3", "lemma1"};
}

std::vector<ClaimReport> run_suite(const std::string& name, const SweepOptions& options)
{
    static const int k2to5[] = {2, 3, 4, 5};
    static const int k2to3[] = {2, 3};
    static const int k3[] = {3};
    const ClaimId distances[] = {ClaimId::Claim1, ClaimId::Claim2};
    const ClaimId confinement[] = {ClaimId::PathConfinement};
    const ClaimId prop1[] = {ClaimId::Proposition1};
    const ClaimId claim3[] = {ClaimId::Claim3};
    const ClaimId lemma1[] = {ClaimId::Lemma1};

    std::vector<ClaimReport> out;
    auto append = [&](std::span<const Instance> family, std::span<const ClaimId> checks) {
        auto part = run_sweep(family, checks, options);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    const bool core = name == "core";
    if (name == "quick") {
        const auto small = subset_family(3, k2to3);
        const ClaimId gadget_checks[] = {ClaimId::Claim1, ClaimId::Claim2, ClaimId::PathConfinement,
                                         ClaimId::Proposition1};
        append(small, gadget_checks);
        const std::vector<Instance> p3{claim3_instances().back()};
        append(p3, claim3);
        append(graph_family(4, k3), lemma1);
        return out;
    }
    if (!core && name != "claims12" && name != "confinement" && name != "prop1" && name != "claim3" &&
        name != "lemma1")
        throw std::invalid_argument("unknown suite '" + name + "'");
    if (core || name == "claims12")
        append(subset_family(4, k2to5), distances);
    if (core || name == "confinement")
        append(subset_family(4, k2to3), confinement);
    if (core || name == "prop1")
        append(subset_family(4, k2to5), prop1);
    if (core || name == "claim3")
        append(claim3_instances(), claim3);
    if (core || name == "lemma1")
        append(graph_family(5, k3), lemma1);
    return out;
}

// --- corruptions ------------------------------------------------------------

namespace {

Mutation with_edges(const GadgetGraph& gg, std::string description, std::span<const Edge> drop,
                    std::span<const Edge> add)
{
    GadgetGraph out = gg;
    out.graph = add_edges(remove_edges(gg.graph, drop), add);
    return {std::move(description), std::move(out)};
}

/// w vertex of non-pair (i, j) with the given superscript.
std::optional<Vertex> find_w(const GadgetGraph& gg, int i, int j, int alpha)
{
    for (Vertex x = 0; x < gg.graph.order(); ++x) {
        const auto& l = gg.labels[x];
        if (l.kind == LabelKind::W && l.i == i && l.j == j && l.alpha == alpha)
            return x;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Mutation> mutate_move_hook(const GadgetGraph& gg)
{
    if (gg.k > 3)
        return std::nullopt;  // hooks sit on the base layer only for k = 2, 3
    const int n = gg.source_order();
    std::vector<Edge> source_pairs;
    for (const auto& p : gg.pairs_k.pairs())
        source_pairs.emplace_back(gg.labels[p.first].i, gg.labels[p.second].i);
    const auto np = nonpairs(n, PairSet(n, source_pairs));
    for (const auto& pk : gg.pairs_k.pairs()) {
        const int a = gg.labels[pk.first].i;
        const int b = gg.labels[pk.second].i;
        for (const auto& t : np) {
            // Keep the hook at b, move the other one to a.
            for (auto [keep, other] : {std::pair{b, a}, std::pair{a, b}}) {
                int moved_alpha = 0, from = -1;
                if (t.second == keep) {
                    moved_alpha = 1;
                    from = t.first;
                } else if (t.first == keep) {
                    moved_alpha = 2;
                    from = t.second;
                } else {
                    continue;
                }
                if (from == other)
                    continue;
                auto w = find_w(gg, t.first, t.second, moved_alpha);
                if (!w)
                    continue;
                const Edge drop[] = {Edge(gg.base[from], *w)};
                const Edge add[] = {Edge(gg.base[other], *w)};
                std::ostringstream os;
                os << "move hook of " << gg.labels[*w].to_string() << " from " << gg.labels[gg.base[from]].to_string()
                   << " to " << gg.labels[gg.base[other]].to_string();
                return with_edges(gg, os.str(), drop, add);
            }
        }
    }
    return std::nullopt;
}

std::optional<Mutation> mutate_detach_w_gadget(const GadgetGraph& gg)
{
    for (Vertex x = 0; x < gg.graph.order(); ++x) {
        const auto& l = gg.labels[x];
        if (l.kind != LabelKind::W || l.alpha != 1)
            continue;
        auto partner = find_w(gg, l.i, l.j, 2);
        std::vector<Edge> drop;
        for (Vertex w : {x, *partner})
            for (Vertex y : gg.graph.neighbors(w))
                drop.emplace_back(w, y);
        std::sort(drop.begin(), drop.end());
        drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
        return with_edges(gg, "detach w gadget of non-pair (" + std::to_string(l.i) + "," + std::to_string(l.j) + ")",
                          drop, {});
    }
    return std::nullopt;
}

std::vector<Mutation> seeded_mutations(const GadgetGraph& gg, std::uint64_t seed, int additions)
{
    std::vector<Mutation> out;
    if (auto m = mutate_move_hook(gg))
        out.push_back(std::move(*m));
    if (auto m = mutate_detach_w_gadget(gg))
        out.push_back(std::move(*m));

    std::vector<Edge> h = gg.base_edges;
    for (const auto& e : gg.graph.edges()) {
        if (std::binary_search(h.begin(), h.end(), e))
            continue;
        const Edge drop[] = {e};
        out.push_back(with_edges(gg, "delete edge " + gg.labels[e.first].to_string() + " - " +
                                         gg.labels[e.second].to_string(),
                                 drop, {}));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, gg.graph.order() - 1);
    for (int added = 0, tries = 0; added < additions && tries < 100 * additions; ++tries) {
        const Vertex a = pick(rng), b = pick(rng);
        if (a == b || gg.graph.adjacent(a, b))
            continue;
        const Edge add[] = {Edge(a, b)};
        out.push_back(with_edges(gg, "add edge " + gg.labels[a].to_string() + " - " + gg.labels[b].to_string(), {},
                                 add));
        ++added;
    }
    return out;
}

}  // namespace rvc
