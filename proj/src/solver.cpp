#include "rvc/solver.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvc/rainbow.hpp"

namespace rvc {

namespace {

/// Internal-vertex sets of the short paths available to each constrained
/// pair. A pair is satisfied once one of its candidate sets is rainbow.
struct CandidateModel {
    std::vector<std::vector<Vertex>> candidates;
    std::vector<int> candidate_pair;
    std::vector<std::vector<int>> by_vertex;
    std::vector<int> alive;  // live candidates per pair
    std::vector<Vertex> order;
    bool infeasible = false;
};

bool is_subset_of(const std::vector<Vertex>& small, const std::vector<Vertex>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Keeps only inclusion-minimal sets; any subset of a rainbow set is rainbow.
std::vector<std::vector<Vertex>> minimal_sets(std::vector<std::vector<Vertex>> sets)
{
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<Vertex>> kept;
    for (auto& s : sets)
        if (std::none_of(kept.begin(), kept.end(), [&](const auto& k) { return is_subset_of(k, s); }))
            kept.push_back(std::move(s));
    return kept;
}

CandidateModel build_model(const Graph& g, const PairSet& pairs, int k)
{
    CandidateModel m;
    m.by_vertex.assign(g.order(), {});
    std::vector<std::uint8_t> relevant(g.order(), 0);

    for (const auto& p : pairs.pairs()) {
        if (g.adjacent(p.first, p.second))
            continue;
        std::vector<std::vector<Vertex>> sets;
        for_each_short_path(g, p.first, p.second, k + 1, nullptr, [&](std::span<const Vertex> path) {
            std::vector<Vertex> internal(path.begin() + 1, path.end() - 1);
            std::sort(internal.begin(), internal.end());
            sets.push_back(std::move(internal));
            return k + 1;
        });
        sets = minimal_sets(std::move(sets));
        if (sets.empty()) {
            m.infeasible = true;
            return m;
        }
        const int pair_index = static_cast<int>(m.alive.size());
        m.alive.push_back(static_cast<int>(sets.size()));
        for (auto& s : sets) {
            const int id = static_cast<int>(m.candidates.size());
            for (Vertex x : s) {
                m.by_vertex[x].push_back(id);
                relevant[x] = 1;
            }
            m.candidates.push_back(std::move(s));
            m.candidate_pair.push_back(pair_index);
        }
    }

    for (Vertex v = 0; v < g.order(); ++v)
        if (relevant[v])
            m.order.push_back(v);
    std::stable_sort(m.order.begin(), m.order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return m;
}

class SubsetSearch {
public:
    SubsetSearch(const CandidateModel& model, int n, int k)
        : m_(model), k_(k), color_(n, 0), blocked_(model.candidates.size(), 0), alive_(model.alive)
    {
    }

    /// Assigns order[depth] = col and propagates. Returns false on a wipe-out
    /// (the assignment is still recorded on the trail and must be undone).
    bool assign(std::size_t depth, Color col)
    {
        const Vertex x = m_.order[depth];
        color_[x] = col;
        bool ok = true;
        for (int cand : m_.by_vertex[x]) {
            if (blocked_[cand])
                continue;
            for (Vertex y : m_.candidates[cand]) {
                if (y != x && color_[y] == col) {
                    blocked_[cand] = 1;
                    trail_.push_back(cand);
                    if (--alive_[m_.candidate_pair[cand]] == 0)
                        ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        return ok;
    }

    void undo(std::size_t depth, std::size_t mark)
    {
        while (trail_.size() > mark) {
            int cand = trail_.back();
            trail_.pop_back();
            blocked_[cand] = 0;
            ++alive_[m_.candidate_pair[cand]];
        }
        color_[m_.order[depth]] = 0;
    }

    bool search(std::size_t depth, int max_color)
    {
        ++nodes_;
        if (depth == m_.order.size())
            return true;
        const int limit = depth == 0 ? 1 : std::min(k_, max_color + 1);
        for (Color col = 1; col <= limit; ++col) {
            const std::size_t mark = trail_.size();
            if (assign(depth, col) && search(depth + 1, std::max(max_color, col)))
                return true;
            undo(depth, mark);
        }
        return false;
    }

    std::uint64_t nodes() const { return nodes_; }

    VertexColoring coloring() const
    {
        std::vector<Color> out(color_);
        for (auto& c : out)
            if (c == 0)
                c = 1;
        return {std::move(out), k_};
    }

private:
    const CandidateModel& m_;
    int k_;
    std::vector<Color> color_;
    std::vector<std::uint8_t> blocked_;
    std::vector<int> alive_;
    std::vector<int> trail_;
    std::uint64_t nodes_ = 0;
};

void require_connected(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("rainbow vertex-connection is defined for connected graphs only");
}

/// Branch `col` of the first unpinned vertex, run in its own search state.
struct BranchOutcome {
    bool found = false;
    std::optional<VertexColoring> witness;
    std::uint64_t nodes = 0;
};

BranchOutcome run_branch(const CandidateModel& m, int n, int k, Color col)
{
    SubsetSearch s(m, n, k);
    BranchOutcome out;
    if (s.assign(0, 1) && s.assign(1, col) && s.search(2, col)) {
        out.found = true;
        out.witness = s.coloring();
    }
    out.nodes = s.nodes() + 2;
    return out;
}

}  // namespace

SolveResult decide_subset_rvc(const Graph& g, const PairSet& pairs, int k, const SolveOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("colour budget must be at least 1");
    if (pairs.order() != g.order() && !pairs.empty())
        throw std::invalid_argument("pair set does not match the graph order");
    require_connected(g);

    SolveResult result;
    const CandidateModel model = build_model(g, pairs, k);
    if (model.infeasible)
        return result;

    if (options.jobs > 1 && model.order.size() >= 2) {
        const int branches = std::min(k, 2);
        std::vector<std::future<BranchOutcome>> futures;
        for (Color col = 1; col <= branches; ++col)
            futures.push_back(std::async(std::launch::async, run_branch, std::cref(model), g.order(), k, col));
        for (auto& f : futures) {
            BranchOutcome b = f.get();
            result.nodes_explored += b.nodes;
            if (b.found && !result.decision) {
                result.decision = true;
                result.witness = std::move(b.witness);
            }
        }
        ++result.nodes_explored;  // root
    } else {
        SubsetSearch s(model, g.order(), k);
        result.decision = s.search(0, 0);
        result.nodes_explored = s.nodes();
        if (result.decision)
            result.witness = s.coloring();
    }

    if (result.decision && !is_subset_rainbow_vc(g, *result.witness, pairs))
        throw std::logic_error("subset search produced a colouring that fails verification");
    return result;
}

SolveResult decide_rvc_le_k(const Graph& g, int k, const SolveOptions& options)
{
    if (k < 0)
        throw std::invalid_argument("colour budget must be non-negative");
    require_connected(g);
    if (k == 0) {
        SolveResult r;
        r.decision = is_complete(g);
        if (r.decision)
            r.witness = VertexColoring::constant(g.order());
        return r;
    }
    SolveResult r = decide_subset_rvc(g, PairSet::all_pairs(g.order()), k, options);
    if (r.decision && !is_rainbow_vertex_connected(g, *r.witness))
        throw std::logic_error("rvc search produced a colouring that fails verification");
    return r;
}

RvcResult rvc_exact(const Graph& g, const SolveOptions& options)
{
    require_connected(g);
    RvcResult out;
    if (is_complete(g)) {
        out.witness = VertexColoring::constant(g.order());
        return out;
    }
    const int upper = g.order() - 2;
    for (int k = std::max(1, diameter(g) - 1); k <= upper; ++k) {
        SolveResult r = decide_rvc_le_k(g, k, options);
        out.nodes_explored += r.nodes_explored;
        if (r.decision) {
            out.value = k;
            out.witness = std::move(*r.witness);
            return out;
        }
    }
    throw std::logic_error("no rainbow colouring with at most n-2 colours was found");
}

SolveResult chromatic_decision(const Graph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("colour budget must be at least 1");
    const int n = g.order();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<Color> color(n, 0);
    SolveResult result;
    auto search = [&](auto& self, std::size_t depth, int max_color) -> bool {
        ++result.nodes_explored;
        if (depth == order.size())
            return true;
        const Vertex x = order[depth];
        const int limit = std::min(k, max_color + 1);
        for (Color col = 1; col <= limit; ++col) {
            bool clash = false;
            for (Vertex y : g.neighbors(x))
                if (color[y] == col) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color[x] = col;
            if (self(self, depth + 1, std::max(max_color, col)))
                return true;
        }
        color[x] = 0;
        return false;
    };
    result.decision = search(search, 0, 0);
    if (result.decision)
        result.witness = VertexColoring(color, k);
    return result;
}

int chromatic_number(const Graph& g)
{
    for (int k = 1;; ++k)
        if (chromatic_decision(g, k).decision)
            return k;
}

}  // namespace rvc
