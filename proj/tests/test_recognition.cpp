#include <doctest.h>

#include <set>

#include "chordless/recognition.hpp"
#include "test_support.hpp"

using namespace chordless;
using namespace chordless::testing;

namespace {

void check_witness(const Graph& g, const ChordWitness& w) {
  const auto& cyc = w.cycle;
  REQUIRE(cyc.size() >= 4);
  std::set<VertexId> distinct(cyc.begin(), cyc.end());
  CHECK(distinct.size() == cyc.size());
  for (size_t i = 0; i < cyc.size(); ++i)
    CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  CHECK(g.has_edge(w.chord.first, w.chord.second));
  // the chord joins two non-consecutive cycle vertices and is not a cycle edge
  int pos_a = -1, pos_b = -1;
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (cyc[i] == w.chord.first) pos_a = static_cast<int>(i);
    if (cyc[i] == w.chord.second) pos_b = static_cast<int>(i);
  }
  REQUIRE(pos_a >= 0);
  REQUIRE(pos_b >= 0);
  int dist = std::abs(pos_a - pos_b);
  dist = std::min(dist, static_cast<int>(cyc.size()) - dist);
  CHECK(dist >= 2);
}

void check_split(const Graph& g, const Split& s) {
  CHECK_NOTHROW(validate_split(g, s));
}

}  // namespace

TEST_CASE("chordless recognition on the named fixtures") {
  Graph triangle = Graph::with_vertex_count(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_chordless(triangle).chordless);

  auto k4 = is_chordless(fx("k4").graph);
  CHECK_FALSE(k4.chordless);
  REQUIRE(k4.witness.has_value());
  check_witness(fx("k4").graph, *k4.witness);

  auto pet = is_chordless(fx("petersen").graph);
  CHECK_FALSE(pet.chordless);
  REQUIRE(pet.witness.has_value());
  check_witness(fx("petersen").graph, *pet.witness);

  for (const Fixture& f : fixture_catalogue())
    CHECK(is_chordless(f.graph).chordless == f.chordless);
}

TEST_CASE("chordless recognition agrees with brute-force cycle enumeration") {
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Graph g = random_graph(8, 4 + static_cast<int>(seed % 10), seed * 31 + 7);
    auto check = is_chordless(g);
    if (check.chordless != !brute_has_chorded_cycle(g)) ++mismatches;
    if (!check.chordless) check_witness(g, *check.witness);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("serial and parallel chordless scans agree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(9, 5 + static_cast<int>(seed % 9), seed * 17 + 3);
    auto a = is_chordless(g, true);
    auto b = is_chordless(g, false);
    CHECK(a.chordless == b.chordless);
    if (!a.chordless) CHECK(a.witness->chord == b.witness->chord);
  }
}

TEST_CASE("2-sparse check") {
  CHECK(is_2sparse(fx("k23").graph).two_sparse);

  auto k4 = is_2sparse(fx("k4").graph);
  CHECK_FALSE(k4.two_sparse);
  REQUIRE(k4.offending_edge.has_value());

  auto tp = is_2sparse(fx("theta_pair").graph);
  CHECK_FALSE(tp.two_sparse);
  CHECK(*tp.offending_edge == Edge{0, 1});  // u and v both have degree 3

  for (const Fixture& f : fixture_catalogue()) {
    auto check = is_2sparse(f.graph);
    CHECK(check.two_sparse == f.two_sparse);
    if (!check.two_sparse) {
      CHECK(f.graph.degree(check.offending_edge->first) >= 3);
      CHECK(f.graph.degree(check.offending_edge->second) >= 3);
    }
  }
}

TEST_CASE("high-degree set") {
  CHECK(stable_high_degree_set(fx("k23").graph) == std::vector<VertexId>{0, 1});
  CHECK(stable_high_degree_set(cycle(6)).empty());
  CHECK(stable_high_degree_set(fx("subdivided_k4").graph) ==
        std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("in a 2-sparse graph the high-degree set is stable") {
  for (const Fixture& f : fixture_catalogue()) {
    if (!f.two_sparse) continue;
    auto s = stable_high_degree_set(f.graph);
    for (VertexId u : s)
      for (VertexId v : s) CHECK_FALSE(f.graph.has_edge(u, v));
  }
}

TEST_CASE("one-ended bipartite subgraph") {
  const Graph k23 = fx("k23").graph;
  CHECK(one_end_bipartite(k23, std::vector<VertexId>{0, 1}) == k23);

  CHECK(one_end_bipartite(cycle(6), std::vector<VertexId>{}).empty());

  // theta-pair: {u, v, w} contains the edge uv, so it is not stable
  const Graph tp = fx("theta_pair").graph;
  CHECK_THROWS_AS(one_end_bipartite(tp, std::vector<VertexId>{0, 1, 2}),
                  std::invalid_argument);

  // s = {u, w}: every edge except vr, vs (5-1, 1-6) survives
  Graph b = one_end_bipartite(tp, std::vector<VertexId>{0, 2});
  std::set<Edge> expected;
  for (const Edge& e : tp.edges())
    if (e != Edge{1, 5} && e != Edge{1, 6}) expected.insert(e);
  CHECK(std::set<Edge>(b.edges().begin(), b.edges().end()) == expected);
  CHECK(b.is_bipartite().has_value());
}

TEST_CASE("proper 2-cutset search on the named shapes") {
  CHECK_FALSE(find_proper_2cutset(fx("k23").graph).has_value());
  CHECK_FALSE(find_proper_2cutset(cycle(6)).has_value());

  auto split = find_proper_2cutset(fx("theta_pair").graph);
  REQUIRE(split.has_value());
  check_split(fx("theta_pair").graph, *split);
  CHECK(split->a == 0);  // u
  CHECK(split->b == 2);  // w
  CHECK(split->x == std::vector<VertexId>{3, 4});  // {p, q}
  CHECK(split->y == std::vector<VertexId>{1, 5, 6});

  CHECK_THROWS_AS(find_proper_2cutset(path(5)), std::invalid_argument);
}

TEST_CASE("K2,4 admits a proper 2-cutset made of two path components") {
  auto split = find_proper_2cutset(fx("k24").graph);
  REQUIRE(split.has_value());
  check_split(fx("k24").graph, *split);
  CHECK(split->x.size() == 2);
}

TEST_CASE("extremal split minimises |X|") {
  const Graph tp = fx("theta_pair").graph;
  auto split = find_extremal_split(tp);
  REQUIRE(split.has_value());
  check_split(tp, *split);
  CHECK(static_cast<int>(split->x.size()) == 2);
  CHECK(static_cast<int>(split->x.size()) == brute_min_split_size(tp));

  CHECK_THROWS_AS(find_extremal_split(fx("k23").graph), std::invalid_argument);

  const Graph chain = fx("theta_pair_chain").graph;
  auto cs = find_extremal_split(chain);
  REQUIRE(cs.has_value());
  check_split(chain, *cs);
  CHECK(static_cast<int>(cs->x.size()) == brute_min_split_size(chain));
}

TEST_CASE("extremal X block is 2-sparse with two cut attachments") {
  for (const char* name : {"theta_pair", "theta_chain", "theta_pair_chain"}) {
    const Graph& g = fx(name).graph;
    auto split = find_extremal_split(g);
    REQUIRE(split.has_value());
    auto [bx, by] = build_blocks(g, *split);
    CHECK(is_2sparse(bx.graph).two_sparse);
    int a_in_x = 0, b_in_x = 0;
    for (VertexId w : g.neighbors(split->a))
      if (std::binary_search(split->x.begin(), split->x.end(), w)) ++a_in_x;
    for (VertexId w : g.neighbors(split->b))
      if (std::binary_search(split->x.begin(), split->x.end(), w)) ++b_in_x;
    CHECK(a_in_x >= 2);
    CHECK(b_in_x >= 2);
  }
}

TEST_CASE("reference and fast cutset scans agree everywhere") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = generate_chordless(10 + static_cast<int>(seed % 30), seed,
                                 seed % 2 ? GenProfile::composed : GenProfile::sparse);
    if (!g.is_biconnected()) {
      // restrict to a biconnected block big enough to be interesting
      auto bc = g.biconnected_components();
      const std::vector<Edge>* big = nullptr;
      for (const auto& blk : bc.blocks)
        if (!big || blk.size() > big->size()) big = &blk;
      if (!big || big->size() < 4) continue;
      std::vector<VertexId> verts;
      for (const Edge& e : *big) {
        verts.push_back(e.first);
        verts.push_back(e.second);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      g = g.induced_subgraph(verts);
    }
    auto fast = find_proper_2cutset(g, CutsetScan::fast);
    auto ref = find_proper_2cutset(g, CutsetScan::serial_reference);
    CHECK(fast.has_value() == ref.has_value());
    if (fast) {
      CHECK(fast->a == ref->a);
      CHECK(fast->b == ref->b);
      CHECK(fast->x == ref->x);
      check_split(g, *fast);
    }
    if (!is_2sparse(g).two_sparse) {
      auto ext_fast = find_extremal_split(g, CutsetScan::fast);
      auto ext_ref = find_extremal_split(g, CutsetScan::serial_reference);
      REQUIRE(ext_fast.has_value());
      REQUIRE(ext_ref.has_value());
      CHECK(ext_fast->a == ext_ref->a);
      CHECK(ext_fast->b == ext_ref->b);
      CHECK(ext_fast->x == ext_ref->x);
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("extremal |X| matches the exhaustive oracle on small graphs") {
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate_chordless(10 + static_cast<int>(seed % 3), seed + 100,
                                 GenProfile::composed);
    if (g.vertex_count() > 12 || !g.is_biconnected() || is_2sparse(g).two_sparse)
      continue;
    auto split = find_extremal_split(g);
    REQUIRE(split.has_value());
    CHECK(static_cast<int>(split->x.size()) == brute_min_split_size(g));
    ++covered;
  }
  CHECK(covered > 5);
}

TEST_CASE("build_blocks attaches fresh markers") {
  const Graph tp = fx("theta_pair").graph;
  auto split = find_extremal_split(tp);
  REQUIRE(split.has_value());
  auto [bx, by] = build_blocks(tp, *split);

  CHECK(bx.marker == 7);
  CHECK(by.marker == 8);
  CHECK(bx.graph.degree(bx.marker) == 2);
  CHECK(bx.graph.has_edge(bx.marker, split->a));
  CHECK(bx.graph.has_edge(bx.marker, split->b));
  CHECK(bx.graph.vertex_count() + by.graph.vertex_count() == tp.vertex_count() + 4);
  CHECK(is_chordless(bx.graph).chordless);
  CHECK(is_chordless(by.graph).chordless);
  CHECK(bx.graph.is_biconnected());
  CHECK(by.graph.is_biconnected());

  Split bad = *split;
  bad.x.pop_back();
  CHECK_THROWS_AS(build_blocks(tp, bad), std::invalid_argument);
}
