// Command-line front end: solvers, reductions, colouring transforms and the
// claim sweeps.
//
// Exit codes: 0 success, 1 negative answer under --expect-yes (or positive
// under --expect-no) or a failed claim, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rvc/gadgets.hpp"
#include "rvc/harness.hpp"
#include "rvc/instance_io.hpp"
#include "rvc/rainbow.hpp"
#include "rvc/solver.hpp"

namespace {

using namespace rvc;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string pairs;
    std::string coloring;
    int k = -1;
    std::string out;
    std::string dot;
    std::string suite = "core";
    int cap = kDefaultClaim3Cap;
    bool expect_yes = false;
    bool expect_no = false;
    bool verbose = false;
    bool all_pairs = false;
    int jobs = 1;
};

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

ParsedInstance load_input(const Options& o)
{
    if (o.input.empty())
        throw UsageError("--input is required");
    return parse_instance(read_file(o.input));
}

int require_k(const Options& o, const ParsedInstance& inst, int minimum)
{
    int k = o.k >= 0 ? o.k : inst.k.value_or(-1);
    if (k < 0)
        throw UsageError("a colour budget is required (-k or \"k\" in the input)");
    if (k < minimum)
        throw UsageError("-k must be at least " + std::to_string(minimum));
    return k;
}

/// --pairs file: either a bare array of [i,j] or an object with "pairs".
PairSet load_pairs(const Options& o, const ParsedInstance& inst)
{
    if (o.pairs.empty()) {
        if (!inst.pairs)
            throw UsageError("no pairs given (use --pairs or a \"pairs\" key)");
        return *inst.pairs;
    }
    const auto text = read_file(o.pairs);
    auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(o.pairs, "malformed pair file");
    if (doc.is_object() && doc.contains("pairs"))
        doc = doc["pairs"];
    nlohmann::json wrapped{{"n", inst.graph.order()}, {"edges", nlohmann::json::array()}, {"pairs", doc}};
    return *parse_instance(wrapped.dump()).pairs;
}

/// --coloring file: a bare array of colours or an object with "coloring"
/// (and optionally "k").
VertexColoring load_coloring(const Options& o, int n, std::optional<int> k)
{
    if (o.coloring.empty())
        throw UsageError("--coloring is required");
    const auto text = read_file(o.coloring);
    auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(o.coloring, "malformed colouring file");
    if (doc.is_object()) {
        if (!k && doc.contains("k") && doc["k"].is_number_integer())
            k = doc["k"].get<int>();
        if (!doc.contains("coloring"))
            throw ParseError("coloring", "missing");
        doc = doc["coloring"];
    }
    nlohmann::json wrapped{{"n", n}, {"edges", nlohmann::json::array()}, {"coloring", doc}};
    if (k)
        wrapped["k"] = *k;
    return *parse_instance(wrapped.dump()).coloring;
}

std::string colors_line(const VertexColoring& c)
{
    std::ostringstream os;
    os << "coloring [";
    for (int v = 0; v < c.order(); ++v)
        os << (v ? "," : "") << c[v];
    os << "]";
    return os.str();
}

int decision_exit(const Options& o, bool decision)
{
    if (o.expect_yes && !decision)
        return kNegative;
    if (o.expect_no && decision)
        return kNegative;
    return kOk;
}

int print_decision(const Options& o, const SolveResult& r)
{
    std::cout << (r.decision ? "yes" : "no") << "\n";
    if (r.witness)
        std::cout << colors_line(*r.witness) << "\n";
    std::cout << "nodes " << r.nodes_explored << "\n";
    return decision_exit(o, r.decision);
}

int cmd_solve(const Options& o)
{
    const auto inst = load_input(o);
    const RvcResult r = rvc_exact(inst.graph, {o.jobs});
    std::cout << "rvc " << r.value << "\n" << colors_line(r.witness) << "\nnodes " << r.nodes_explored << "\n";
    if (!o.out.empty())
        write_output(o.out, emit_instance(make_instance_file(inst.graph, nullptr, &r.witness)));
    return kOk;
}

int cmd_decide(const Options& o)
{
    const auto inst = load_input(o);
    return print_decision(o, decide_rvc_le_k(inst.graph, require_k(o, inst, 0), {o.jobs}));
}

int cmd_subset(const Options& o)
{
    const auto inst = load_input(o);
    return print_decision(o, decide_subset_rvc(inst.graph, load_pairs(o, inst), require_k(o, inst, 1), {o.jobs}));
}

int cmd_reduce_lemma1(const Options& o)
{
    const auto inst = load_input(o);
    const Lemma1Instance red = lemma1_reduce(inst.graph);
    write_output(o.out, emit_instance(make_instance_file(red.gprime, &red.pairs)));
    if (!o.dot.empty())
        write_output(o.dot, emit_dot(red.gprime, &red.pairs));
    return kOk;
}

int cmd_gadget(const Options& o)
{
    const auto inst = load_input(o);
    const GadgetGraph gg = build_gadget(inst.graph, load_pairs(o, inst), require_k(o, inst, 2));
    write_output(o.out, emit_gadget(gg));
    if (!o.dot.empty())
        write_output(o.dot, emit_dot(gg));
    return kOk;
}

int cmd_lift(const Options& o)
{
    const auto inst = load_input(o);
    const int k = require_k(o, inst, 2);
    const GadgetGraph gg = build_gadget(inst.graph, load_pairs(o, inst), k);
    const VertexColoring c = o.coloring.empty() && inst.coloring ? *inst.coloring
                                                                : load_coloring(o, inst.graph.order(), std::nullopt);
    const VertexColoring ck = lift_coloring(gg, c);
    write_output(o.out, emit_gadget(gg, &ck));
    if (!o.dot.empty())
        write_output(o.dot, emit_dot(gg));
    return kOk;
}

/// Reads a gadget file and writes the source instance (recovered from the
/// base layer) with the projected colouring.
int cmd_project(const Options& o)
{
    if (o.input.empty())
        throw UsageError("--input is required");
    const InstanceFile file = parse_instance_file(read_file(o.input));
    const ParsedInstance inst = validate(file);
    if (!file.base)
        throw ParseError("base", "project needs a gadget file with a base map");
    const auto& base = *file.base;
    const int n = static_cast<int>(base.size());
    if (n == 0)
        throw ParseError("base", "empty base map");
    std::vector<int> index(inst.graph.order(), -1);
    for (int i = 0; i < n; ++i)
        index[base[i]] = i;

    const VertexColoring ck = o.coloring.empty() && inst.coloring ? *inst.coloring
                                                                 : load_coloring(o, inst.graph.order(), inst.k);
    std::vector<Color> colors(n);
    for (int i = 0; i < n; ++i)
        colors[i] = ck[base[i]];
    const VertexColoring c(colors, ck.budget());

    std::vector<Edge> edges, pairs;
    for (const auto& e : inst.graph.edges())
        if (index[e.first] >= 0 && index[e.second] >= 0)
            edges.emplace_back(index[e.first], index[e.second]);
    if (inst.pairs)
        for (const auto& p : inst.pairs->pairs())
            if (index[p.first] >= 0 && index[p.second] >= 0)
                pairs.emplace_back(index[p.first], index[p.second]);
    const Graph g = Graph::from_edges(n, edges);
    const PairSet ps(n, pairs);
    write_output(o.out, emit_instance(make_instance_file(g, &ps, &c)));
    return kOk;
}

int cmd_verify(const Options& o)
{
    const auto inst = load_input(o);
    const VertexColoring c = o.coloring.empty() && inst.coloring
                                 ? *inst.coloring
                                 : load_coloring(o, inst.graph.order(), o.k >= 1 ? std::optional<int>(o.k) : inst.k);
    std::optional<Edge> bad;
    if (!o.all_pairs && (!o.pairs.empty() || inst.pairs)) {
        bad = first_unconnected_pair(inst.graph, c, load_pairs(o, inst));
    } else {
        if (!is_connected(inst.graph))
            throw UsageError("graph is disconnected");
        bad = first_unconnected_pair(inst.graph, c, PairSet::all_pairs(inst.graph.order()));
    }
    std::cout << (bad ? "no" : "yes") << "\n";
    if (bad)
        std::cout << "unconnected pair (" << bad->first << "," << bad->second << ")\n";
    return decision_exit(o, !bad);
}

int cmd_claims(const Options& o)
{
    SweepOptions so;
    so.jobs = o.jobs;
    so.claim3_cap = o.cap;
    const auto reports = run_suite(o.suite, so);
    for (const auto& r : reports)
        if (o.verbose || r.status == Status::Fail)
            std::cout << format_report_line(r) << "\n";
    const auto s = summarize(reports);
    std::cout << "suite " << o.suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
              << " skipped\n";
    if (!o.out.empty())
        write_output(o.out, emit_report(o.suite, reports));
    return s.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rainbow vertex-connection solvers, reductions and claim checks"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "Instance file (JSON), '-' for stdin");
        sub->add_option("--out,-o", o.out, "Output file (default stdout)");
        sub->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto add_expect = [&](CLI::App* sub) {
        auto* y = sub->add_flag("--expect-yes", o.expect_yes, "Exit 1 unless the answer is yes");
        auto* n = sub->add_flag("--expect-no", o.expect_no, "Exit 1 unless the answer is no");
        y->excludes(n);
    };

    auto* solve = app.add_subcommand("solve", "Compute rvc(G) with a witness colouring");
    add_common(solve);
    auto* decide = app.add_subcommand("decide", "Decide rvc(G) <= k");
    add_common(decide);
    add_expect(decide);
    decide->add_option("-k", o.k, "Colour budget");
    auto* subset = app.add_subcommand("subset", "Decide the k-subset rainbow vertex-connection problem");
    add_common(subset);
    add_expect(subset);
    subset->add_option("-k", o.k, "Colour budget");
    subset->add_option("--pairs", o.pairs, "Pair file (array or object with \"pairs\")");
    auto* reduce = app.add_subcommand("reduce-lemma1", "Pendant reduction from k-colouring");
    add_common(reduce);
    reduce->add_option("--dot", o.dot, "Also write Graphviz output");
    auto* gadget = app.add_subcommand("gadget", "Build the layered gadget G_k");
    add_common(gadget);
    gadget->add_option("-k", o.k, "Gadget level (>= 2)");
    gadget->add_option("--pairs", o.pairs, "Pair file");
    gadget->add_option("--dot", o.dot, "Also write Graphviz output");
    auto* lift = app.add_subcommand("lift", "Lift a source colouring onto G_k");
    add_common(lift);
    lift->add_option("-k", o.k, "Gadget level (>= 2)");
    lift->add_option("--pairs", o.pairs, "Pair file");
    lift->add_option("--coloring", o.coloring, "Source colouring file");
    lift->add_option("--dot", o.dot, "Also write Graphviz output");
    auto* project = app.add_subcommand("project", "Project a G_k colouring back to the source graph");
    add_common(project);
    project->add_option("--coloring", o.coloring, "Gadget colouring file (default: the one in --input)");
    auto* claims = app.add_subcommand("claims", "Run a claim sweep");
    claims->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    claims->add_option("--cap", o.cap, "Vertex cap for exhaustive gadget solves")->check(CLI::PositiveNumber);
    claims->add_option("--out,-o", o.out, "Write a JSON report");
    claims->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    claims->add_flag("--verbose,-v", o.verbose, "Print every report, not only failures");
    auto* verify = app.add_subcommand("verify", "Check a colouring against a graph (and optional pairs)");
    add_common(verify);
    add_expect(verify);
    verify->add_option("-k", o.k, "Colour budget of the colouring");
    verify->add_option("--pairs", o.pairs, "Pair file");
    verify->add_option("--coloring", o.coloring, "Colouring file (default: the one in --input)");
    verify->add_flag("--all", o.all_pairs, "Check every vertex pair, ignoring any pair list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve)
            return cmd_solve(o);
        if (*decide)
            return cmd_decide(o);
        if (*subset)
            return cmd_subset(o);
        if (*reduce)
            return cmd_reduce_lemma1(o);
        if (*gadget)
            return cmd_gadget(o);
        if (*lift)
            return cmd_lift(o);
        if (*project)
            return cmd_project(o);
        if (*claims)
            return cmd_claims(o);
        if (*verify)
            return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
