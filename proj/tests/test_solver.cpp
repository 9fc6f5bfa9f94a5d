#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rvc/harness.hpp"
#include "rvc/rainbow.hpp"
#include "rvc/solver.hpp"

using namespace rvc;

TEST(RvcExact, NamedGraphs)
{
    EXPECT_EQ(rvc_exact(complete_graph(4)).value, 0);
    EXPECT_EQ(rvc_exact(Graph::from_edges(1, {})).value, 0);
    EXPECT_EQ(rvc_exact(star_graph(5)).value, 1);
    EXPECT_EQ(rvc_exact(cycle_graph(5)).value, 1);
    for (int n = 3; n <= 7; ++n)
        EXPECT_EQ(rvc_exact(path_graph(n)).value, n - 2) << "n=" << n;
}

TEST(RvcExact, CyclesMatchBruteForce)
{
    for (int n = 4; n <= 8; ++n) {
        const Graph c = cycle_graph(n);
        const auto r = rvc_exact(c);
        EXPECT_EQ(r.value, oracle::rvc_brute(c)) << "C" << n;
        EXPECT_TRUE(oracle::rainbow_all(c, r.witness.colors()));
    }
}

TEST(RvcExact, AllSmallGraphsMatchBruteForce)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) {
            const auto r = rvc_exact(g);
            ASSERT_EQ(r.value, oracle::rvc_brute(g));
            if (r.value > 0) {
                EXPECT_EQ(r.witness.budget(), r.value);
                EXPECT_TRUE(oracle::rainbow_all(g, r.witness.colors()));
            }
        }
}

TEST(RvcExact, RejectsDisconnected)
{
    EXPECT_THROW(rvc_exact(Graph::from_edges(3, {{0, 1}})), std::invalid_argument);
}

TEST(DecideSubset, PathExamples)
{
    const Graph p5 = path_graph(5);
    EXPECT_FALSE(decide_subset_rvc(p5, PairSet(5, {{0, 4}}), 2).decision);
    const auto yes = decide_subset_rvc(p5, PairSet(5, {{0, 4}}), 3);
    ASSERT_TRUE(yes.decision);
    ASSERT_TRUE(yes.witness);
    EXPECT_TRUE(is_subset_rainbow_vc(p5, *yes.witness, PairSet(5, {{0, 4}})));
    EXPECT_TRUE(decide_subset_rvc(p5, PairSet(5, {}), 1).decision);
    EXPECT_THROW(decide_subset_rvc(p5, PairSet(5, {}), 0), std::invalid_argument);
    EXPECT_THROW(decide_subset_rvc(Graph::from_edges(3, {{0, 1}}), PairSet(3, {}), 1), std::invalid_argument);
}

TEST(DecideSubset, AgreesWithBruteForceOnRandomInstances)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(rng() % v), v);
        const Graph g = Graph::from_edges(n, edges);
        std::vector<Edge> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2)
                    pairs.emplace_back(a, b);
        const PairSet p(n, pairs);
        const int k = 1 + static_cast<int>(rng() % 3);
        const auto r = decide_subset_rvc(g, p, k);
        ASSERT_EQ(r.decision, oracle::subset_brute(g, p, k)) << "trial " << trial;
        EXPECT_EQ(r.witness.has_value(), r.decision);
    }
}

TEST(DecideSubset, MonotoneInKAndPairs)
{
    const Graph g = path_graph(6);
    const PairSet small(6, {{0, 3}});
    const PairSet big(6, {{0, 3}, {0, 5}});
    bool prev = false;
    for (int k = 1; k <= 4; ++k) {
        const bool now = decide_subset_rvc(g, big, k).decision;
        EXPECT_TRUE(!prev || now) << "k=" << k;
        if (now)
            EXPECT_TRUE(decide_subset_rvc(g, small, k).decision);
        prev = now;
    }
}

TEST(DecideSubset, JobsDoNotChangeTheWitness)
{
    const Graph g = cycle_graph(8);
    const auto a = decide_rvc_le_k(g, 3, {1});
    const auto b = decide_rvc_le_k(g, 3, {3});
    EXPECT_EQ(a.decision, b.decision);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(decide_rvc_le_k(g, 3).witness, a.witness);
}

TEST(DecideRvc, ZeroColoursMeansComplete)
{
    EXPECT_TRUE(decide_rvc_le_k(complete_graph(3), 0).decision);
    EXPECT_FALSE(decide_rvc_le_k(path_graph(3), 0).decision);
}

TEST(Chromatic, MatchesBruteForce)
{
    EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
    EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
    EXPECT_EQ(chromatic_number(Graph::from_edges(1, {})), 1);
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : connected_graphs(n))
            ASSERT_EQ(chromatic_number(g), oracle::chromatic_brute(g));
    const Graph c5 = cycle_graph(5);
    const auto r = chromatic_decision(c5, 3);
    ASSERT_TRUE(r.witness);
    for (const auto& e : c5.edges())
        EXPECT_NE((*r.witness)[e.first], (*r.witness)[e.second]);
}
