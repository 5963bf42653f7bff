#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordless {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

struct BiconnectedResult {
  // Every edge of the graph appears in exactly one block.
  std::vector<std::vector<Edge>> blocks;
  std::vector<VertexId> cut_vertices;
};

/// Simple undirected graph over stable vertex ids. Immutable after
/// construction; subgraph extraction preserves ids so colourings lift back
/// to the parent graph.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertex_ids, const std::vector<Edge>& edge_list);

  // Vertices 0..n-1 with the given edges.
  static Graph with_vertex_count(int n, const std::vector<Edge>& edge_list);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return ids_.empty(); }

  const std::vector<VertexId>& vertex_ids() const { return ids_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  int degree(VertexId v) const;
  int max_degree() const;  // throws on an empty graph

  // Neighbours as ids, sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;

  // Index space: vertices are 0..n-1 in ascending id order.
  int index_of(VertexId v) const;  // throws on unknown vertex
  VertexId id_of(int index) const { return ids_[index]; }
  std::span<const int> neighbors_by_index(int index) const;
  int degree_by_index(int index) const {
    return static_cast<int>(adj_idx_[index].size());
  }

  Graph induced_subgraph(std::span<const VertexId> keep) const;

  // Components as sorted id lists, ordered by smallest member id.
  std::vector<std::vector<VertexId>> connected_components() const;
  bool is_connected() const;

  BiconnectedResult biconnected_components() const;
  bool is_biconnected() const;  // 2-connected: connected, n >= 3, no cutvertex

  // A bipartition (X, Y) with X holding the smallest id per component, or
  // nullopt when an odd cycle exists.
  std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
  is_bipartite() const;

  bool operator==(const Graph& other) const {
    return ids_ == other.ids_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> ids_;               // sorted ascending
  std::vector<Edge> edges_;                 // normalized, sorted
  std::vector<std::vector<VertexId>> adj_;  // by index, neighbour ids sorted
  std::vector<std::vector<int>> adj_idx_;   // by index, neighbour indices sorted
};

}  // namespace chordless
