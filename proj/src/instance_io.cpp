#include "rvc/instance_io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace rvc {

namespace {

using nlohmann::json;

std::string at_index(const std::string& field, std::size_t i)
{
    return field + "[" + std::to_string(i) + "]";
}

int read_int(const json& v, const std::string& where)
{
    if (!v.is_number_integer())
        throw ParseError(where, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ParseError(where, "integer out of range");
    return static_cast<int>(x);
}

std::vector<int> read_int_array(const json& v, const std::string& field)
{
    if (!v.is_array())
        throw ParseError(field, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(read_int(v[i], at_index(field, i)));
    return out;
}

std::vector<Edge> read_pairs(const json& v, const std::string& field)
{
    if (!v.is_array())
        throw ParseError(field, "expected an array of [i,j] pairs");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto where = at_index(field, i);
        if (!v[i].is_array() || v[i].size() != 2)
            throw ParseError(where, "expected a pair [i,j]");
        const int a = read_int(v[i][0], where + "[0]");
        const int b = read_int(v[i][1], where + "[1]");
        out.emplace_back(a, b);
    }
    return out;
}

std::string line_of(std::string_view text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
    const auto nl = text.substr(0, byte).rfind('\n');
    const auto col = nl == std::string_view::npos ? byte : byte - nl - 1;
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void write_pairs(std::ostream& os, const std::vector<Edge>& pairs)
{
    os << "[";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        os << (i ? "," : "") << "[" << pairs[i].first << "," << pairs[i].second << "]";
    os << "]";
}

template <typename T>
void write_array(std::ostream& os, const std::vector<T>& values)
{
    os << "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? "," : "");
        if constexpr (std::is_same_v<T, std::string>)
            os << json(values[i]).dump();
        else
            os << values[i];
    }
    os << "]";
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "malformed instance text");
    }
    if (!doc.is_object())
        throw ParseError("document", "expected an object");

    static const char* known[] = {"n", "edges", "pairs", "coloring", "k", "base", "labels"};
    for (const auto& item : doc.items())
        if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known))
            throw ParseError(item.key(), "unknown key");

    InstanceFile f;
    if (!doc.contains("n"))
        throw ParseError("n", "missing vertex count");
    f.n = read_int(doc["n"], "n");
    if (!doc.contains("edges"))
        throw ParseError("edges", "missing edge list");
    f.edges = read_pairs(doc["edges"], "edges");
    if (doc.contains("pairs"))
        f.pairs = read_pairs(doc["pairs"], "pairs");
    if (doc.contains("coloring"))
        f.coloring = read_int_array(doc["coloring"], "coloring");
    if (doc.contains("k"))
        f.k = read_int(doc["k"], "k");
    if (doc.contains("base"))
        f.base = read_int_array(doc["base"], "base");
    if (doc.contains("labels")) {
        const auto& v = doc["labels"];
        if (!v.is_array())
            throw ParseError("labels", "expected an array of strings");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string())
                throw ParseError(at_index("labels", i), "expected a string");
            labels.push_back(v[i].get<std::string>());
        }
        f.labels = std::move(labels);
    }
    return f;
}

ParsedInstance validate(const InstanceFile& f)
{
    if (f.n < 1)
        throw ParseError("n", "vertex count must be at least 1");
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        const auto& e = f.edges[i];
        if (e.first == e.second)
            throw ParseError(at_index("edges", i), "self-loop on vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second >= f.n)
            throw ParseError(at_index("edges", i), "endpoint out of range for n=" + std::to_string(f.n));
    }
    ParsedInstance out{Graph::from_edges(f.n, f.edges)};

    if (f.pairs) {
        for (std::size_t i = 0; i < f.pairs->size(); ++i) {
            const auto& p = (*f.pairs)[i];
            if (p.first == p.second)
                throw ParseError(at_index("pairs", i), "diagonal pair on vertex " + std::to_string(p.first));
            if (p.first < 0 || p.second >= f.n)
                throw ParseError(at_index("pairs", i), "vertex out of range for n=" + std::to_string(f.n));
        }
        out.pairs = PairSet(f.n, *f.pairs);
    }
    if (f.k && *f.k < 0)
        throw ParseError("k", "must be non-negative");
    out.k = f.k;
    if (f.coloring) {
        const auto& c = *f.coloring;
        if (static_cast<int>(c.size()) != f.n)
            throw ParseError("coloring", "has " + std::to_string(c.size()) + " entries, expected " +
                                             std::to_string(f.n) + " (colourings must be total)");
        int budget = f.k.value_or(0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1)
                throw ParseError(at_index("coloring", i), "colours start at 1");
            if (f.k && c[i] > *f.k)
                throw ParseError(at_index("coloring", i), "colour exceeds k=" + std::to_string(*f.k));
            budget = std::max(budget, c[i]);
        }
        out.coloring = VertexColoring(c, std::max(budget, 1));
    }
    if (f.base) {
        for (std::size_t i = 0; i < f.base->size(); ++i)
            if ((*f.base)[i] < 0 || (*f.base)[i] >= f.n)
                throw ParseError(at_index("base", i), "vertex out of range for n=" + std::to_string(f.n));
    }
    if (f.labels && static_cast<int>(f.labels->size()) != f.n)
        throw ParseError("labels", "expected one label per vertex");
    return out;
}

ParsedInstance parse_instance(std::string_view text)
{
    return validate(parse_instance_file(text));
}

std::string emit_instance(const InstanceFile& f)
{
    std::ostringstream os;
    os << "{\n  \"n\": " << f.n << ",\n  \"edges\": ";
    write_pairs(os, f.edges);
    if (f.pairs) {
        os << ",\n  \"pairs\": ";
        write_pairs(os, *f.pairs);
    }
    if (f.coloring) {
        os << ",\n  \"coloring\": ";
        write_array(os, *f.coloring);
    }
    if (f.k)
        os << ",\n  \"k\": " << *f.k;
    if (f.base) {
        os << ",\n  \"base\": ";
        write_array(os, *f.base);
    }
    if (f.labels) {
        os << ",\n  \"labels\": ";
        write_array(os, *f.labels);
    }
    os << "\n}\n";
    return os.str();
}

InstanceFile make_instance_file(const Graph& g, const PairSet* pairs, const VertexColoring* coloring)
{
    InstanceFile f;
    f.n = g.order();
    f.edges = g.edges();
    if (pairs)
        f.pairs = pairs->pairs();
    if (coloring) {
        f.coloring = coloring->colors();
        f.k = coloring->budget();
    }
    return f;
}

InstanceFile gadget_file(const GadgetGraph& gg, const VertexColoring* coloring)
{
    InstanceFile f = make_instance_file(gg.graph, &gg.pairs_k, coloring);
    f.k = gg.k;
    f.base = gg.base;
    std::vector<std::string> labels;
    for (const auto& l : gg.labels)
        labels.push_back(l.to_string());
    f.labels = std::move(labels);
    return f;
}

std::string emit_gadget(const GadgetGraph& gg, const VertexColoring* coloring)
{
    return emit_instance(gadget_file(gg, coloring));
}

std::string emit_dot(const Graph& g, const PairSet* pairs)
{
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v)
        os << "  " << v << ";\n";
    for (const auto& e : g.edges())
        os << "  " << e.first << " -- " << e.second << ";\n";
    if (pairs)
        for (const auto& p : pairs->pairs())
            os << "  " << p.first << " -- " << p.second << " [style=dashed, color=red, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string emit_dot(const GadgetGraph& gg)
{
    std::map<int, std::vector<Vertex>> layers;
    for (Vertex x = 0; x < gg.graph.order(); ++x)
        layers[gg.labels[x].level].push_back(x);

    std::ostringstream os;
    os << "graph G" << gg.k << " {\n  node [shape=ellipse, fontsize=10];\n";
    for (const auto& [level, members] : layers) {
        const bool is_base = level == gg.k;
        os << "  subgraph cluster_" << (level < 0 ? std::string("hub") : "layer" + std::to_string(level)) << " {\n";
        os << "    label=\"" << (level < 0 ? std::string("hub") : is_base ? "base layer H_" + std::to_string(gg.k)
                                                                              : "layer " + std::to_string(level))
           << "\";\n";
        if (is_base)
            os << "    node [style=filled, fillcolor=lightblue];\n";
        for (Vertex x : members)
            os << "    " << x << " [label=" << json(gg.labels[x].to_string()).dump() << "];\n";
        os << "  }\n";
    }
    for (const auto& e : gg.graph.edges()) {
        const bool h = std::binary_search(gg.base_edges.begin(), gg.base_edges.end(), e);
        os << "  " << e.first << " -- " << e.second << (h ? " [penwidth=2]" : "") << ";\n";
    }
    for (const auto& p : gg.pairs_k.pairs())
        os << "  " << p.first << " -- " << p.second << " [style=dashed, color=red, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string emit_report(std::string_view suite, std::span<const ClaimReport> reports)
{
    nlohmann::ordered_json doc;
    doc["suite"] = std::string(suite);
    const auto s = summarize(reports);
    doc["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
    auto& list = doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json item;
        item["claim"] = to_string(r.claim);
        item["instance"] = r.instance;
        item["status"] = to_string(r.status);
        if (r.counterexample) {
            const auto& c = *r.counterexample;
            item["counterexample"] = {{"pair", {c.pair.first, c.pair.second}},
                                      {"observed", c.observed},
                                      {"expected", c.expected},
                                      {"detail", c.detail}};
        } else {
            item["counterexample"] = nullptr;
        }
        if (!r.note.empty())
            item["note"] = r.note;
        list.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

std::string format_report_line(const ClaimReport& r)
{
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << to_string(r.claim) << " " << r.instance;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        os << " | pair (" << c.pair.first << "," << c.pair.second << ") observed " << c.observed << " expected "
           << c.expected << ": " << c.detail;
    }
    if (!r.note.empty())
        os << " | " << r.note;
    return os.str();
}

}  // namespace rvc
