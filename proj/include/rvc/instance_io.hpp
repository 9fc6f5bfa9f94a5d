#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rvc/gadgets.hpp"
#include "rvc/graph.hpp"
#include "rvc/harness.hpp"

namespace rvc {

/// Raised for malformed instance text. `where` names the offending field
/// (e.g. "edges[2]") or the line/column of a syntax error.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& message)
        : std::runtime_error(where + ": " + message), where_(std::move(where))
    {
    }
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// On-disk instance object. Key order on output: n, edges, pairs, coloring,
/// k, base, labels. Vertices are 0-indexed, colours 1-indexed.
struct InstanceFile {
    int n = 0;
    std::vector<Edge> edges;
    std::optional<std::vector<Edge>> pairs;
    std::optional<std::vector<Color>> coloring;
    std::optional<int> k;
    /// Gadget files only: base[i] = v_{i,k}, labels[x] = name of vertex x.
    std::optional<std::vector<Vertex>> base;
    std::optional<std::vector<std::string>> labels;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Syntax and shape check only. Throws ParseError.
InstanceFile parse_instance_file(std::string_view text);

struct ParsedInstance {
    Graph graph;
    std::optional<PairSet> pairs;
    std::optional<VertexColoring> coloring;
    std::optional<int> k;
};

/// Full validation into domain objects. Throws ParseError naming the field.
ParsedInstance parse_instance(std::string_view text);
ParsedInstance validate(const InstanceFile& file);

std::string emit_instance(const InstanceFile& file);

InstanceFile make_instance_file(const Graph& g, const PairSet* pairs = nullptr, const VertexColoring* coloring = nullptr);

/// Instance text of G_k with P_k, k, base map and label table; `pairs` is
/// always written, possibly empty.
InstanceFile gadget_file(const GadgetGraph& gg, const VertexColoring* coloring = nullptr);
std::string emit_gadget(const GadgetGraph& gg, const VertexColoring* coloring = nullptr);

/// Graphviz text. The gadget form clusters vertices by layer, fills the base
/// layer, draws E(H_k) bold and P_k as dashed red non-edges.
std::string emit_dot(const Graph& g, const PairSet* pairs = nullptr);
std::string emit_dot(const GadgetGraph& gg);

/// Machine-readable sweep report.
std::string emit_report(std::string_view suite, std::span<const ClaimReport> reports);

/// One human-readable line per report.
std::string format_report_line(const ClaimReport& r);

}  // namespace rvc
