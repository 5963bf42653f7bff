#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/recognition.hpp"
#include "chordless/sparse_colouring.hpp"

namespace chordless {

enum class ColourMode { edge, total };

struct NotChordlessError : std::runtime_error {
  explicit NotChordlessError(ChordWitness w)
      : std::runtime_error("graph is not chordless"), witness(std::move(w)) {}
  ChordWitness witness;
};

struct DeltaTooSmallError : std::invalid_argument {
  explicit DeltaTooSmallError(int d)
      : std::invalid_argument("max degree " + std::to_string(d) +
                              " is below 3; the guarantee needs max degree >= 3"),
        delta(d) {}
  int delta;
};

/// Bookkeeping for the degree-3 total case: a and b of a split are contracted
/// into w_ab inside the Y-side graph; a' and b' are their unique Y-neighbours.
struct ContractionRecord {
  VertexId contracted_vertex = -1;
  std::pair<VertexId, VertexId> originals{-1, -1};
  std::pair<VertexId, VertexId> external_neighbours{-1, -1};
};

/// One split step of the recursion, recorded for inspection and testing.
struct TraceStep {
  Split split;
  std::string case_name;  // "edge" | "total-delta4" | "total-delta3"
  bool x_block_two_sparse = false;
  int a_neighbours_in_x = 0;
  int b_neighbours_in_x = 0;
  VertexId marker_x = -1;
  std::optional<ContractionRecord> contraction;
  int graph_vertices = 0;
  int depth = 0;
};

struct ColourTrace {
  std::vector<TraceStep> steps;
  int recursive_calls = 0;
  int max_depth = 0;
  int depth = 0;  // transient
};

/// Proper edge colouring of a chordless graph with at most max_degree
/// colours (max_degree >= 3). Throws NotChordlessError / DeltaTooSmallError.
Colouring edge_colour_chordless(const Graph& g, ColourTrace* trace = nullptr);

/// Proper total colouring of a chordless graph with at most max_degree+1
/// colours (max_degree >= 3).
Colouring total_colour_chordless(const Graph& g, ColourTrace* trace = nullptr);

/// Colours each biconnected component independently and permutes block
/// palettes at the cutvertices. Requires a chordless input; accepts any
/// max degree (palette is padded to the global max_degree or max_degree+1,
/// with the floors 3 and 4 for cycles).
Colouring merge_articulation_blocks(const Graph& g, ColourMode mode,
                                    ColourTrace* trace = nullptr);

/// Paths, cycles and other max-degree-<=-2 graphs, outside the main
/// guarantee: even cycles take 2 edge colours, odd ones 3; totals use 4.
Colouring colour_small_delta(const Graph& g, ColourMode mode);

// Internal recursion steps, exposed for direct testing. All require a
// 2-connected chordless input that is not 2-sparse.
Colouring colour_recursive_edge(const Graph& g, ColourTrace* trace = nullptr);
Colouring colour_recursive_total_delta4(const Graph& g, ColourTrace* trace = nullptr);
Colouring colour_recursive_total_delta3(const Graph& g, ColourTrace* trace = nullptr);

/// Extremal decomposition tree (Theorem-style inspection): each 2-connected
/// block is split recursively until a 2-sparse block remains.
struct DecompositionNode {
  std::string kind;  // "graph" | "edge-leaf" | "cycle-leaf" | "two-sparse-leaf" | "split"
  int vertices = 0;
  int edges = 0;
  // split nodes only:
  VertexId a = -1, b = -1;
  int x_size = 0, y_size = 0;
  bool x_block_two_sparse = false;
  VertexId marker_x = -1, marker_y = -1;
  std::vector<DecompositionNode> children;
};

DecompositionNode decompose(const Graph& g);

}  // namespace chordless
