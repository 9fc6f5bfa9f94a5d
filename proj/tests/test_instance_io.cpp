#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rvc/instance_io.hpp"

using namespace rvc;

namespace {

std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(RVC_TEST_DATA) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string parse_error_where(std::string_view text)
{
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "<no error>";
}

}  // namespace

TEST(InstanceIo, ParsesFullInstance)
{
    const auto inst = parse_instance(R"({"n": 4, "edges": [[0,1],[1,2],[2,3]], "pairs": [[0,3]],
                                         "coloring": [1,2,1,2], "k": 2})");
    EXPECT_EQ(inst.graph, path_graph(4));
    ASSERT_TRUE(inst.pairs);
    EXPECT_TRUE(inst.pairs->contains(0, 3));
    ASSERT_TRUE(inst.coloring);
    EXPECT_EQ(inst.coloring->budget(), 2);
    EXPECT_EQ(inst.k, 2);
}

TEST(InstanceIo, ErrorsNameTheField)
{
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [[0,1],[2,2]]})"), "edges[1]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [[0,3]]})"), "edges[0]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [], "pairs": [[1,1]]})"), "pairs[0]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [], "coloring": [1,2]})"), "coloring");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [], "coloring": [1,0,1]})"), "coloring[1]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [], "coloring": [1,3,1], "k": 2})"), "coloring[1]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [[0,"x"]]})"), "edges[0][1]");
    EXPECT_EQ(parse_error_where(R"({"n": 3, "edges": [], "extra": 1})"), "extra");
    EXPECT_EQ(parse_error_where(R"({"edges": []})"), "n");
    EXPECT_EQ(parse_error_where(R"({"n": 0, "edges": []})"), "n");
    EXPECT_EQ(parse_error_where("[1, 2]"), "document");
}

TEST(InstanceIo, SyntaxErrorsReportLineAndColumn)
{
    const auto where = parse_error_where("{\n  \"n\": 3,\n  \"edges\": [[0,1],]\n}");
    EXPECT_EQ(where.rfind("line 3", 0), 0u) << where;
}

TEST(InstanceIo, RoundTripIsIdentity)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        InstanceFile f;
        f.n = 1 + static_cast<int>(rng() % 8);
        for (int a = 0; a < f.n; ++a)
            for (int b = a + 1; b < f.n; ++b)
                if (rng() % 2)
                    f.edges.emplace_back(a, b);
        if (rng() % 2) {
            f.pairs = std::vector<Edge>{};
            for (int a = 0; a < f.n; ++a)
                for (int b = a + 1; b < f.n; ++b)
                    if (rng() % 3 == 0)
                        f.pairs->emplace_back(a, b);
        }
        if (rng() % 2) {
            f.k = 1 + static_cast<int>(rng() % 4);
            f.coloring = std::vector<Color>(f.n);
            for (auto& c : *f.coloring)
                c = 1 + static_cast<int>(rng() % *f.k);
        }
        const auto text = emit_instance(f);
        EXPECT_EQ(parse_instance_file(text), f) << text;
        EXPECT_EQ(emit_instance(parse_instance_file(text)), text);
    }
}

TEST(InstanceIo, GadgetMatchesGolden)
{
    const auto gg = build_gadget(complete_graph(3), PairSet::all_pairs(3), 2);
    EXPECT_EQ(emit_gadget(gg), read_data("k3_all_pairs_k2.json"));
    const auto back = parse_instance_file(read_data("k3_all_pairs_k2.json"));
    ASSERT_TRUE(back.labels);
    EXPECT_EQ((*back.labels)[1], "v_{0,0}^{(1)}");
    EXPECT_EQ(back.base, gg.base);
}

TEST(InstanceIo, DotOutput)
{
    const auto gg = build_gadget(path_graph(3), PairSet(3, {{0, 2}}), 2);
    const auto dot = emit_dot(gg);
    EXPECT_NE(dot.find("cluster_hub"), std::string::npos);
    EXPECT_NE(dot.find("fillcolor=lightblue"), std::string::npos);
    EXPECT_NE(dot.find("penwidth=2"), std::string::npos);
    EXPECT_NE(dot.find("style=dashed"), std::string::npos);
    const PairSet p(3, {{0, 2}});
    const auto plain = emit_dot(path_graph(3), &p);
    EXPECT_NE(plain.find("0 -- 1;"), std::string::npos);
    EXPECT_NE(plain.find("0 -- 2 [style=dashed"), std::string::npos);
}

TEST(InstanceIo, ReportIsValidJson)
{
    const auto gg = build_gadget(path_graph(3), PairSet(3, {{0, 2}}), 2);
    const std::vector<ClaimReport> reports{check_claim1(gg), check_claim2(gg)};
    const auto doc = nlohmann::json::parse(emit_report("unit", reports));
    EXPECT_EQ(doc["suite"], "unit");
    EXPECT_EQ(doc["summary"]["passed"], 2);
    EXPECT_EQ(doc["reports"].size(), 2u);
    EXPECT_TRUE(doc["reports"][0]["counterexample"].is_null());
    EXPECT_EQ(format_report_line(reports[0]).rfind("[pass] claim1 G_2 n=3", 0), 0u);
}
