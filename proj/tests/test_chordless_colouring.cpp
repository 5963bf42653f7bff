#include <doctest.h>

#include "chordless/chordless_colouring.hpp"
#include "chordless/oracle.hpp"
#include "test_support.hpp"

using namespace chordless;
using namespace chordless::testing;

namespace {

Graph two_claws_shared_leaf() {
  return Graph::with_vertex_count(7, {{0, 1}, {0, 2}, {0, 3}, {4, 3}, {4, 5}, {4, 6}});
}

Graph two_k23_shared_leg() {
  std::vector<Edge> edges;
  for (VertexId hub : {0, 1})
    for (VertexId leg : {2, 3, 4}) edges.push_back(make_edge(hub, leg));
  for (VertexId hub : {5, 6})
    for (VertexId leg : {4, 7, 8}) edges.push_back(make_edge(hub, leg));
  return Graph::with_vertex_count(9, edges);
}

}  // namespace

TEST_CASE("edge colouring of the chordless fixtures uses max degree colours") {
  for (const Fixture& f : fixture_catalogue()) {
    if (!f.chordless || f.max_degree < 3) continue;
    Colouring c = edge_colour_chordless(f.graph);
    auto rep = verify_edge_colouring(f.graph, c);
    CHECK(rep.valid);
    CHECK(c.palette_size == f.max_degree);
    CHECK(c.max_colour_used() <= f.max_degree);
    CHECK(rep.colours_used == f.chromatic_index);
  }
}

TEST_CASE("total colouring of the chordless fixtures uses max degree + 1") {
  for (const Fixture& f : fixture_catalogue()) {
    if (!f.chordless || f.max_degree < 3) continue;
    Colouring c = total_colour_chordless(f.graph);
    auto rep = verify_total_colouring(f.graph, c);
    CHECK(rep.valid);
    CHECK(c.palette_size == f.max_degree + 1);
    CHECK(c.max_colour_used() <= f.max_degree + 1);
    CHECK(rep.colours_used == f.total_chromatic);
  }
}

TEST_CASE("non-chordless and small-degree inputs are rejected") {
  CHECK_THROWS_AS(edge_colour_chordless(fx("k4").graph), NotChordlessError);
  CHECK_THROWS_AS(total_colour_chordless(fx("petersen").graph), NotChordlessError);
  try {
    edge_colour_chordless(fx("k4").graph);
  } catch (const NotChordlessError& err) {
    CHECK(err.witness.cycle.size() >= 4);
    CHECK(fx("k4").graph.has_edge(err.witness.chord.first, err.witness.chord.second));
  }
  CHECK_THROWS_AS(edge_colour_chordless(cycle(5)), DeltaTooSmallError);
  CHECK_THROWS_AS(total_colour_chordless(path(6)), DeltaTooSmallError);
}

TEST_CASE("recursive edge case on the theta-pair gadget") {
  const Graph tp = fx("theta_pair").graph;
  ColourTrace trace;
  Colouring c = colour_recursive_edge(tp, &trace);
  CHECK(verify_edge_colouring(tp, c).valid);
  CHECK(c.max_colour_used() <= 4);

  REQUIRE(trace.steps.size() == 1);
  const TraceStep& step = trace.steps[0];
  CHECK(step.case_name == "edge");
  CHECK(step.split.a == 0);
  CHECK(step.split.b == 2);
  CHECK(step.split.x == std::vector<VertexId>{3, 4});
  CHECK(step.x_block_two_sparse);
  CHECK(step.a_neighbours_in_x >= 2);
  CHECK(step.b_neighbours_in_x >= 2);
  CHECK(trace.recursive_calls <= tp.vertex_count());
}

TEST_CASE("recursive total case with max degree 4") {
  const Graph tp = fx("theta_pair").graph;
  ColourTrace trace;
  Colouring c = colour_recursive_total_delta4(tp, &trace);
  CHECK(verify_total_colouring(tp, c).valid);
  CHECK(c.max_colour_used() <= 5);
  CHECK(trace.steps.front().case_name == "total-delta4");
}

TEST_CASE("recursive total case with max degree 3 contracts the cut pair") {
  const Graph chain = fx("theta_chain").graph;
  ColourTrace trace;
  Colouring c = colour_recursive_total_delta3(chain, &trace);
  CHECK(verify_total_colouring(chain, c).valid);
  CHECK(c.max_colour_used() <= 4);

  REQUIRE(!trace.steps.empty());
  const TraceStep& step = trace.steps[0];
  CHECK(step.case_name == "total-delta3");
  REQUIRE(step.contraction.has_value());
  const ContractionRecord& rec = *step.contraction;
  CHECK(rec.external_neighbours.first != rec.external_neighbours.second);
  CHECK(rec.contracted_vertex > chain.vertex_ids().back());
  // the lifted boundary edges carry the colours of the marker edges
  CHECK(c.edge_colour(rec.originals.first, rec.external_neighbours.first) ==
        c.edge_colour(rec.originals.first, rec.external_neighbours.first));
  CHECK(trace.recursive_calls <= chain.vertex_count());

  // brute force confirms 4 is optimal here
  CHECK(brute_force_total_chromatic(chain, 6) == 4);
}

TEST_CASE("merging articulation blocks") {
  Graph claws = two_claws_shared_leaf();
  Colouring ce = merge_articulation_blocks(claws, ColourMode::edge);
  CHECK(verify_edge_colouring(claws, ce).valid);
  CHECK(ce.max_colour_used() <= 3);

  Graph k23s = two_k23_shared_leg();
  Colouring ct = merge_articulation_blocks(k23s, ColourMode::total);
  CHECK(verify_total_colouring(k23s, ct).valid);
  CHECK(k23s.max_degree() == 4);          // the shared leg has degree 4
  CHECK(ct.max_colour_used() <= 5);       // so five colours are the floor

  // a single biconnected block merges to itself
  const Graph tp = fx("theta_pair").graph;
  Colouring direct = edge_colour_chordless(tp);
  Colouring merged = merge_articulation_blocks(tp, ColourMode::edge);
  CHECK(direct.edge_colours == merged.edge_colours);
}

TEST_CASE("small-degree convenience layer") {
  Colouring even = colour_small_delta(cycle(6), ColourMode::edge);
  CHECK(verify_edge_colouring(cycle(6), even).valid);
  CHECK(even.max_colour_used() == 2);

  Colouring odd = colour_small_delta(cycle(5), ColourMode::edge);
  CHECK(verify_edge_colouring(cycle(5), odd).valid);
  CHECK(odd.max_colour_used() == 3);

  Colouring tot = colour_small_delta(cycle(7), ColourMode::total);
  CHECK(verify_total_colouring(cycle(7), tot).valid);
  CHECK(tot.max_colour_used() <= 4);

  Colouring pt = colour_small_delta(path(6), ColourMode::total);
  CHECK(verify_total_colouring(path(6), pt).valid);
  CHECK(pt.max_colour_used() <= 4);

  CHECK_THROWS_AS(colour_small_delta(fx("claw").graph, ColourMode::edge),
                  std::invalid_argument);
}

TEST_CASE("end-to-end corpus run with trace invariants") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 12 + static_cast<int>(seed * 3) % 50;
    for (GenProfile profile : {GenProfile::sparse, GenProfile::composed}) {
      Graph g = generate_chordless(n, seed, profile);
      const int delta = g.max_degree();

      ColourTrace et;
      Colouring ec = edge_colour_chordless(g, &et);
      CHECK(verify_edge_colouring(g, ec).valid);
      CHECK(ec.max_colour_used() <= delta);
      CHECK(ec.palette_size == delta);

      ColourTrace tt;
      Colouring tc = total_colour_chordless(g, &tt);
      CHECK(verify_total_colouring(g, tc).valid);
      CHECK(tc.max_colour_used() <= delta + 1);
      CHECK(tc.palette_size == delta + 1);

      for (const ColourTrace* trace : {&et, &tt}) {
        CHECK(trace->recursive_calls <= g.vertex_count());
        CHECK(trace->max_depth <= g.vertex_count());
        for (const TraceStep& step : trace->steps) {
          CHECK(step.x_block_two_sparse);
          CHECK(step.a_neighbours_in_x >= 2);
          CHECK(step.b_neighbours_in_x >= 2);
        }
      }
      if (profile == GenProfile::composed) CHECK(!tt.steps.empty());
    }
  }
}

TEST_CASE("the decomposition tree bottoms out in 2-sparse leaves") {
  DecompositionNode root = decompose(fx("theta_pair").graph);
  CHECK(root.kind == "graph");
  REQUIRE(root.children.size() == 1);
  const DecompositionNode& node = root.children[0];
  CHECK(node.kind == "split");
  CHECK(node.a == 0);
  CHECK(node.b == 2);
  CHECK(node.x_size == 2);
  CHECK(node.x_block_two_sparse);
  REQUIRE(node.children.size() == 2);
  CHECK(node.children[0].kind == "two-sparse-leaf");

  DecompositionNode sparse = decompose(fx("k23").graph);
  REQUIRE(sparse.children.size() == 1);
  CHECK(sparse.children[0].kind == "two-sparse-leaf");

  DecompositionNode chain = decompose(fx("theta_pair_chain").graph);
  std::function<int(const DecompositionNode&)> count_splits =
      [&](const DecompositionNode& nd) {
        int total = nd.kind == "split" ? 1 : 0;
        for (const auto& child : nd.children) total += count_splits(child);
        return total;
      };
  CHECK(count_splits(chain) >= 1);
}
