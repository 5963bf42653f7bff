#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Parse failure with a line number (1-based) for the edge-list format.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line_no)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                       : msg),
        line(line_no) {}
  int line = 0;
};

struct GraphDocument {
  int n = 0;
  std::vector<Edge> edges;  // 0-based ids, normalized u < v
  std::optional<std::string> name;

  Graph to_graph() const { return Graph::with_vertex_count(n, edges); }
  bool operator==(const GraphDocument& other) const = default;
};

enum class GraphFormat { auto_detect, edgelist, structured };

/// Accepts a plain edge list ("n m" then m lines "u v") or a structured JSON
/// object with fields "n" and "edges" (optional "name"). Rejects self-loops,
/// duplicate or reversed-duplicate pairs and out-of-range ids, reporting the
/// offending line.
GraphDocument parse_graph(const std::string& text,
                          GraphFormat format = GraphFormat::auto_detect);

std::string serialise_edgelist(const GraphDocument& doc);
std::string serialise_structured(const GraphDocument& doc);

}  // namespace chordless
