#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Partial or total assignment of colours 1..palette_size to edges and
/// optionally vertices.
struct Colouring {
  std::map<Edge, int> edge_colours;
  std::map<VertexId, int> vertex_colours;
  int palette_size = 0;

  bool has_edge_colour(VertexId u, VertexId v) const {
    return edge_colours.count(make_edge(u, v)) > 0;
  }
  int edge_colour(VertexId u, VertexId v) const;
  void set_edge_colour(VertexId u, VertexId v, int c) {
    edge_colours[make_edge(u, v)] = c;
  }
  bool has_vertex_colour(VertexId v) const { return vertex_colours.count(v) > 0; }
  int vertex_colour(VertexId v) const;

  int max_colour_used() const;
  int colours_used() const;  // number of distinct colours

  void merge_from(const Colouring& other);
};

/// Per-edge admissible colour sets (sorted ascending).
struct ColourLists {
  std::map<Edge, std::vector<int>> lists;

  const std::vector<int>& at(VertexId u, VertexId v) const;
  bool has(VertexId u, VertexId v) const { return lists.count(make_edge(u, v)) > 0; }
  void set(VertexId u, VertexId v, std::vector<int> colours);

  static ColourLists uniform(const Graph& g, std::vector<int> colours);
};

/// Precoloured frame for the cubic extension lemma: u has degree 2 with
/// neighbours a, b of degree 3; a, b, au, ub carry the four given colours.
struct CubicAnchor {
  VertexId u = -1;
  VertexId a = -1;
  VertexId b = -1;
  int colour_a = 1;
  int colour_b = 1;
  int colour_au = 2;
  int colour_ub = 3;
};

// remaps every colour c to perm[c]; perm is 1-based over 1..palette
Colouring apply_palette_permutation(Colouring c, std::span<const int> perm);

// colours appearing on edges incident to v (plus v's own colour when present)
std::vector<int> boundary_palette(const Graph& g, const Colouring& c, VertexId v);

/// Proper edge colouring of a bipartite graph with exactly max_degree colours.
Colouring konig_edge_colour(const Graph& g);

/// List edge colouring of a bipartite graph whose degree->=3 vertices all lie
/// in X and carry one list per X-vertex; every list has at least
/// max(deg(u), deg(v)) colours.
Colouring list_edge_colour_bipartite(
    const Graph& g,
    const std::pair<std::vector<VertexId>, std::vector<VertexId>>& bipartition,
    const ColourLists& lists);

/// Extension to 2-sparse graphs: s is a stable set containing every vertex of
/// degree >= 3, lists are uniform per s-vertex, and edges with no end in s
/// have lists of size >= 3.
Colouring list_edge_colour_2sparse(const Graph& g, std::span<const VertexId> s,
                                   const ColourLists& lists);

/// Proper max_degree-edge-colouring of a 2-sparse graph with max degree >= 3.
Colouring edge_colour_2sparse(const Graph& g);

/// Total colouring extension for 2-sparse graphs: every s-vertex is
/// precoloured, s-incident edges carry uniform per-s-vertex lists avoiding
/// their s-end's precolour, and everything else is coloured greedily.
/// palette 0 means max_degree+1 (requiring max_degree >= 4); an explicit
/// palette >= 5 admits smaller-degree graphs, as the recursion needs.
Colouring total_colour_2sparse_delta4(const Graph& g, std::span<const VertexId> s,
                                      const std::map<VertexId, int>& vertex_precolours,
                                      const ColourLists& lists, int palette = 0);

/// Extends a total precolouring of p1, p1p2, p(k-1)pk, pk (with p1 and pk
/// alike) to a 4-total-colouring of the whole path.
Colouring extend_path_total(std::span<const VertexId> path, int colour_first_vertex,
                            int colour_first_edge, int colour_last_edge,
                            int colour_last_vertex);

/// 4-total-colouring of a 2-connected 2-sparse graph with max degree 3,
/// optionally extending an anchored precolouring.
Colouring total_colour_2sparse_cubic(const Graph& g,
                                     const std::optional<CubicAnchor>& anchor);

/// (max_degree+1)-total-colouring of a 2-sparse graph when max degree >= 4;
/// 4 colours otherwise.
Colouring total_colour_2sparse(const Graph& g);

}  // namespace chordless
