#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// A cycle of the graph together with an edge joining two of its vertices
/// that is not itself a cycle edge.
struct ChordWitness {
  std::vector<VertexId> cycle;  // v0, v1, ..., vk-1 (closing edge vk-1 -> v0)
  Edge chord;
};

struct ChordCheck {
  bool chordless = true;
  std::optional<ChordWitness> witness;
};

struct TwoSparseCheck {
  bool two_sparse = true;
  std::optional<Edge> offending_edge;  // both endpoints of degree >= 3
};

/// Witness of a proper 2-cutset: {X, Y, {a,b}} partitions the vertices,
/// a and b are non-adjacent, no edge joins X to Y, both sides contain an
/// a-b path and neither side is a chordless path.
struct Split {
  std::vector<VertexId> x;  // sorted
  std::vector<VertexId> y;  // sorted
  VertexId a = -1;
  VertexId b = -1;
};

enum class BlockSide { x, y };

/// A side of a split plus a fresh marker vertex adjacent to both cut
/// vertices, standing in for the opposite side.
struct SplitBlock {
  Graph graph;
  VertexId marker = -1;
  BlockSide side = BlockSide::x;
  std::pair<VertexId, VertexId> cut_pair{-1, -1};
};

/// Selects the candidate-pair scan used by the cutset search. Both produce
/// identical results; the reference scan tests every non-adjacent pair with
/// no prefiltering and exists as the baseline the fast kernel is checked and
/// benchmarked against.
enum class CutsetScan {
  serial_reference,
  fast,  // articulation-point prefilter, OpenMP over candidate vertices
};

/// True iff no cycle of g has a chord; otherwise a witness is produced.
ChordCheck is_chordless(const Graph& g);
ChordCheck is_chordless(const Graph& g, bool parallel);

/// True iff every edge has an endpoint of degree at most 2.
TwoSparseCheck is_2sparse(const Graph& g);

/// Vertices of degree at least 3, sorted. Stable whenever g is 2-sparse.
std::vector<VertexId> stable_high_degree_set(const Graph& g);

/// Subgraph on s and its neighbours keeping exactly the edges with one end
/// in s. Requires s to be a stable set.
Graph one_end_bipartite(const Graph& g, std::span<const VertexId> s);

/// Throws std::invalid_argument when s is not a valid split of g.
void validate_split(const Graph& g, const Split& s);

/// Some split of a proper 2-cutset, or nullopt when none exists. The result
/// is deterministic: lowest (a, b) id pair admitting a split, smallest X
/// within that pair. Requires g 2-connected.
std::optional<Split> find_proper_2cutset(const Graph& g,
                                         CutsetScan scan = CutsetScan::fast);

/// A split minimising |X| over all proper 2-cutsets (ties: lowest (a, b),
/// then lexicographically smallest X). The X-side block is then 2-sparse and
/// a, b each have at least two neighbours in X. Requires g 2-connected,
/// chordless and not 2-sparse.
std::optional<Split> find_extremal_split(const Graph& g,
                                         CutsetScan scan = CutsetScan::fast);

/// Blocks over X and Y, each with a fresh marker vertex (ids beyond g's
/// id range: max+1 for the X block, max+2 for the Y block).
std::pair<SplitBlock, SplitBlock> build_blocks(const Graph& g, const Split& s);

}  // namespace chordless
