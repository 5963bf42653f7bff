#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/sparse_colouring.hpp"

namespace chordless {

/// An element is an edge (u, v) or a vertex (v, -1).
using Element = std::pair<VertexId, VertexId>;

inline Element vertex_element(VertexId v) { return {v, -1}; }
inline Element edge_element(VertexId u, VertexId v) { return make_edge(u, v); }

struct Violation {
  Element first;
  Element second;
  int colour = 0;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
  int colours_used = 0;
};

/// Checks that no two adjacent edges share a colour. Every edge of g must be
/// coloured (throws otherwise).
VerificationReport verify_edge_colouring(const Graph& g, const Colouring& c);

/// Checks vertex-vertex, edge-edge and vertex-incident-edge conflicts. Every
/// vertex and edge of g must be coloured.
VerificationReport verify_total_colouring(const Graph& g, const Colouring& c);

/// Least k <= limit admitting a proper k-edge-colouring, by exhaustive
/// backtracking (the colours of one maximum-degree vertex are pinned for
/// symmetry). Throws when k exceeds the limit or the instance is too big.
int brute_force_chromatic_index(const Graph& g, int limit);

/// Least k <= limit admitting a proper total colouring.
int brute_force_total_chromatic(const Graph& g, int limit);

/// Streams every connected chordless graph with max degree >= 3 on exactly
/// n <= 9 vertices, one representative per isomorphism class, built by vertex
/// augmentation from smaller classes.
void enumerate_small_chordless(int n, const std::function<void(const Graph&)>& emit);

bool graphs_isomorphic(const Graph& a, const Graph& b);

enum class GenProfile { sparse, composed };

/// Deterministic chordless instance generator. "sparse" subdivides every edge
/// of a random connected base graph (always 2-sparse); "composed" glues
/// degree-2 path bundles onto non-adjacent vertex pairs of a generalized
/// theta, verifying chordlessness and rejecting failed glues (the result is
/// not 2-sparse for n >= 7).
Graph generate_chordless(int n, std::uint64_t seed, GenProfile profile);

struct Fixture {
  std::string name;
  Graph graph;
  bool chordless = true;
  bool two_sparse = true;
  int max_degree = 0;
  int chromatic_index = -1;   // -1: not asserted
  int total_chromatic = -1;
};

/// Named instances with expected properties; the "theta-pair" fixture is the
/// 7-vertex 2-connected chordless graph whose edge uv joins two degree-3
/// vertices.
const std::vector<Fixture>& fixture_catalogue();

}  // namespace chordless
