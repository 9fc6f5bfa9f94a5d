#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rvc/gadgets.hpp"
#include "rvc/graph.hpp"
#include "rvc/harness.hpp"
#include "rvc/instance_io.hpp"
#include "rvc/rainbow.hpp"
#include "rvc/solver.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rvc;

namespace {

using PyPairs = std::vector<std::pair<int, int>>;

std::vector<Edge> to_edges(const PyPairs& pairs)
{
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        out.emplace_back(a, b);
    return out;
}

PyPairs to_py(const std::vector<Edge>& edges)
{
    PyPairs out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.emplace_back(e.first, e.second);
    return out;
}

std::string status_name(const ClaimReport& r)
{
    return to_string(r.status);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Rainbow vertex-connection solvers, reductions and claim checks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsatisfiedPairError>(m, "UnsatisfiedPairError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const PyPairs& edges) { return Graph::from_edges(n, to_edges(edges)); }), "n"_a,
             "edges"_a = PyPairs{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", [](const Graph& g) { return to_py(g.edges()); })
        .def("neighbors", &Graph::neighbors, "v"_a)
        .def("adjacent", &Graph::adjacent, "u"_a, "v"_a)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<PairSet>(m, "PairSet")
        .def(py::init([](int n, const PyPairs& pairs) { return PairSet(n, to_edges(pairs)); }), "n"_a, "pairs"_a)
        .def_static("all_pairs", &PairSet::all_pairs, "n"_a)
        .def_property_readonly("order", &PairSet::order)
        .def_property_readonly("pairs", [](const PairSet& p) { return to_py(p.pairs()); })
        .def("contains", &PairSet::contains, "a"_a, "b"_a)
        .def("__len__", &PairSet::size);

    py::class_<VertexColoring>(m, "VertexColoring")
        .def(py::init<std::vector<Color>, int>(), "colors"_a, "k"_a)
        .def_property_readonly("colors", &VertexColoring::colors)
        .def_property_readonly("k", &VertexColoring::budget)
        .def("__len__", &VertexColoring::order)
        .def("__getitem__", [](const VertexColoring& c, int v) {
            if (v < 0 || v >= c.order())
                throw py::index_error();
            return c[v];
        })
        .def("__eq__", [](const VertexColoring& a, const VertexColoring& b) { return a == b; })
        .def("__repr__", [](const VertexColoring& c) {
            std::string s = "VertexColoring([";
            for (int v = 0; v < c.order(); ++v)
                s += (v ? ", " : "") + std::to_string(c[v]);
            return s + "], k=" + std::to_string(c.budget()) + ")";
        });

    m.def("path_graph", &path_graph, "n"_a);
    m.def("cycle_graph", &cycle_graph, "n"_a);
    m.def("complete_graph", &complete_graph, "n"_a);
    m.def("star_graph", &star_graph, "leaves"_a);
    m.def("distance", [](const Graph& g, int u, int v) -> std::optional<int> {
        const int d = distance(g, u, v);
        if (d == kInfinity)
            return std::nullopt;
        return d;
    }, "g"_a, "u"_a, "v"_a);
    m.def("diameter", &diameter, "g"_a);
    m.def("is_connected", &is_connected, "g"_a);
    m.def("is_complete", &is_complete, "g"_a);

    m.def("path_budget", &path_budget, "n"_a, "k"_a);
    m.def("exists_rainbow_path", &exists_rainbow_path, "g"_a, "c"_a, "u"_a, "v"_a);
    m.def("is_rainbow_vertex_connected", &is_rainbow_vertex_connected, "g"_a, "c"_a);
    m.def("is_subset_rainbow_vc", &is_subset_rainbow_vc, "g"_a, "c"_a, "pairs"_a);
    m.def("first_unconnected_pair", [](const Graph& g, const VertexColoring& c, const PairSet& p)
              -> std::optional<std::pair<int, int>> {
        if (auto e = first_unconnected_pair(g, c, p))
            return std::pair{e->first, e->second};
        return std::nullopt;
    }, "g"_a, "c"_a, "pairs"_a);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("decision", &SolveResult::decision)
        .def_readonly("witness", &SolveResult::witness)
        .def_readonly("nodes_explored", &SolveResult::nodes_explored)
        .def("__bool__", [](const SolveResult& r) { return r.decision; });
    py::class_<RvcResult>(m, "RvcResult")
        .def_readonly("value", &RvcResult::value)
        .def_readonly("witness", &RvcResult::witness)
        .def_readonly("nodes_explored", &RvcResult::nodes_explored);

    m.def("decide_subset_rvc", [](const Graph& g, const PairSet& p, int k, int jobs) {
        py::gil_scoped_release release;
        return decide_subset_rvc(g, p, k, {jobs});
    }, "g"_a, "pairs"_a, "k"_a, "jobs"_a = 1);
    m.def("decide_rvc_le_k", [](const Graph& g, int k, int jobs) {
        py::gil_scoped_release release;
        return decide_rvc_le_k(g, k, {jobs});
    }, "g"_a, "k"_a, "jobs"_a = 1);
    m.def("rvc_exact", [](const Graph& g, int jobs) {
        py::gil_scoped_release release;
        return rvc_exact(g, {jobs});
    }, "g"_a, "jobs"_a = 1);
    m.def("chromatic_number", &chromatic_number, "g"_a);

    py::class_<Lemma1Instance>(m, "Lemma1Instance")
        .def_readonly("graph", &Lemma1Instance::gprime)
        .def_readonly("pairs", &Lemma1Instance::pairs)
        .def_readonly("pendant_of", &Lemma1Instance::pendant_of);
    m.def("lemma1_reduce", &lemma1_reduce, "g"_a);
    m.def("lemma1_lift", &lemma1_lift, "g"_a, "c"_a);
    m.def("lemma1_project", &lemma1_project, "instance"_a, "c"_a);

    py::class_<GadgetGraph>(m, "GadgetGraph")
        .def_readonly("graph", &GadgetGraph::graph)
        .def_readonly("k", &GadgetGraph::k)
        .def_readonly("base", &GadgetGraph::base)
        .def_readonly("pairs", &GadgetGraph::pairs_k)
        .def_property_readonly("base_edges", [](const GadgetGraph& gg) { return to_py(gg.base_edges); })
        .def_property_readonly("labels", [](const GadgetGraph& gg) {
            std::vector<std::string> out;
            for (const auto& l : gg.labels)
                out.push_back(l.to_string());
            return out;
        });
    m.def("nonpairs", [](int n, const PairSet& p) { return to_py(nonpairs(n, p)); }, "n"_a, "pairs"_a);
    m.def("build_gadget", &build_gadget, "g"_a, "pairs"_a, "k"_a);
    m.def("lift_coloring", py::overload_cast<const GadgetGraph&, const VertexColoring&>(&lift_coloring), "gadget"_a,
          "c"_a);
    m.def("project_coloring", &project_coloring, "gadget"_a, "ck"_a);

    py::class_<ClaimReport>(m, "ClaimReport")
        .def_property_readonly("claim", [](const ClaimReport& r) { return to_string(r.claim); })
        .def_readonly("instance", &ClaimReport::instance)
        .def_property_readonly("status", &status_name)
        .def_readonly("note", &ClaimReport::note)
        .def_property_readonly("counterexample", [](const ClaimReport& r) -> py::object {
            if (!r.counterexample)
                return py::none();
            const auto& c = *r.counterexample;
            return py::dict("pair"_a = py::make_tuple(c.pair.first, c.pair.second), "observed"_a = c.observed,
                            "expected"_a = c.expected, "detail"_a = c.detail);
        })
        .def("__str__", &format_report_line);

    m.def("check_claim1", &check_claim1, "gadget"_a);
    m.def("check_claim2", &check_claim2, "gadget"_a);
    m.def("check_path_confinement", &check_path_confinement, "gadget"_a);
    m.def("check_proposition1", py::overload_cast<const Graph&, const PairSet&, int>(&check_proposition1), "g"_a,
          "pairs"_a, "k"_a);
    m.def("check_claim3_exhaustive", &check_claim3_exhaustive, "g"_a, "pairs"_a, "k"_a,
          "cap"_a = kDefaultClaim3Cap);
    m.def("check_lemma1_equivalence", &check_lemma1_equivalence, "g"_a, "k"_a);
    m.def("connected_graphs", &connected_graphs, "n"_a);
    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name, int jobs) {
        py::gil_scoped_release release;
        return run_suite(name, {jobs});
    }, "name"_a, "jobs"_a = 1);

    m.def("emit_gadget", [](const GadgetGraph& gg) { return emit_gadget(gg); }, "gadget"_a);
    m.def("emit_dot", [](const GadgetGraph& gg) { return emit_dot(gg); }, "gadget"_a);
}
