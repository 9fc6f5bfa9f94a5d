#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rvc/instance_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(RVC_TOOL) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("rvctool_" + std::to_string(::getpid()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& text)
    {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, SolvePath)
{
    const auto in = file("p5.json", R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]})");
    const auto r = run("solve -i " + in);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("rvc 3\n", 0), 0u) << r.out;
}

TEST_F(Cli, DecideExpectations)
{
    const auto in = file("p5.json", R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]})");
    EXPECT_EQ(run("decide -i " + in + " -k 3 --expect-yes").code, 0);
    const auto no = run("decide -i " + in + " -k 2 --expect-yes");
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out.rfind("no\n", 0), 0u);
    EXPECT_EQ(run("decide -i " + in + " -k 2 --expect-no").code, 0);
    EXPECT_EQ(run("decide -i " + in + " -k 2 --expect-yes --expect-no").code, 2);
}

TEST_F(Cli, SubsetWithPairFile)
{
    const auto in = file("p5.json", R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]})");
    const auto pairs = file("pairs.json", "[[0,4]]");
    EXPECT_EQ(run("subset -i " + in + " --pairs " + pairs + " -k 2").out.substr(0, 3), "no\n");
    EXPECT_EQ(run("subset -i " + in + " --pairs " + pairs + " -k 3 --expect-yes").code, 0);
}

TEST_F(Cli, UsageAndInputErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("solve -i " + (dir / "missing.json").string()).code, 2);
    const auto loop = file("loop.json", R"({"n":3,"edges":[[1,1]]})");
    EXPECT_EQ(run("solve -i " + loop).code, 2);
    const auto p3 = file("p3.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    EXPECT_EQ(run("gadget -i " + p3 + " -k 2").code, 2);  // no pairs anywhere
    EXPECT_EQ(run("claims --suite nope").code, 2);
}

TEST_F(Cli, GadgetLiftVerifyProject)
{
    const auto in = file("p3.json", R"({"n":3,"edges":[[0,1],[1,2]],"pairs":[[0,2]]})");
    const auto color = file("c.json", "[2,1,2]");
    const auto gadget = (dir / "g.json").string();
    const auto dot = (dir / "g.dot").string();
    ASSERT_EQ(run("gadget -i " + in + " -k 2 -o " + gadget + " --dot " + dot).code, 0);
    const auto parsed = rvc::parse_instance_file(run("gadget -i " + in + " -k 2").out);
    EXPECT_EQ(parsed.n, 14);
    EXPECT_EQ(parsed.edges.size(), 27u);
    EXPECT_TRUE(fs::exists(dot));

    const auto lifted = (dir / "lifted.json").string();
    ASSERT_EQ(run("lift -i " + in + " -k 2 --coloring " + color + " -o " + lifted).code, 0);
    EXPECT_EQ(run("verify -i " + lifted + " --all --expect-yes").code, 0);

    const auto back = rvc::parse_instance(run("project -i " + lifted).out);
    EXPECT_EQ(back.graph, rvc::path_graph(3));
    ASSERT_TRUE(back.coloring);
    EXPECT_EQ(back.coloring->colors(), (std::vector<int>{2, 1, 2}));
    ASSERT_TRUE(back.pairs);
    EXPECT_TRUE(back.pairs->contains(0, 2));
}

TEST_F(Cli, VerifyReportsFailingPair)
{
    const auto in = file("p4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3]],"coloring":[1,1,1,1]})");
    const auto r = run("verify -i " + in);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "no\nunconnected pair (0,3)\n");
    EXPECT_EQ(run("verify -i " + in + " --expect-yes").code, 1);
}

TEST_F(Cli, ReduceLemma1)
{
    const auto in = file("k3.json", R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})");
    const auto out = rvc::parse_instance(run("reduce-lemma1 -i " + in).out);
    EXPECT_EQ(out.graph.order(), 6);
    EXPECT_EQ(out.graph.size(), 6);
    ASSERT_TRUE(out.pairs);
    EXPECT_EQ(out.pairs->size(), 3u);
}

TEST_F(Cli, ClaimsQuickSuite)
{
    const auto report = (dir / "report.json").string();
    const auto r = run("claims --suite quick -o " + report);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 failed"), std::string::npos) << r.out;
    EXPECT_TRUE(fs::exists(report));
}
