#include <doctest.h>

#include <set>

#include "chordless/oracle.hpp"
#include "chordless/sparse_colouring.hpp"
#include "test_support.hpp"

using namespace chordless;
using namespace chordless::testing;

TEST_CASE("Koenig colours the named bipartite shapes with exactly max degree") {
  Colouring c4 = konig_edge_colour(cycle(4));
  CHECK(verify_edge_colouring(cycle(4), c4).valid);
  CHECK(c4.palette_size == 2);
  CHECK(verify_edge_colouring(cycle(4), c4).colours_used == 2);

  const Graph claw = fx("claw").graph;
  Colouring cc = konig_edge_colour(claw);
  CHECK(verify_edge_colouring(claw, cc).valid);
  CHECK(cc.colours_used() == 3);

  const Graph k33 = complete_bipartite(3, 3);
  Colouring c33 = konig_edge_colour(k33);
  CHECK(verify_edge_colouring(k33, c33).valid);
  CHECK(c33.colours_used() == 3);
  CHECK(c33.max_colour_used() == 3);

  CHECK_THROWS_AS(konig_edge_colour(cycle(5)), std::invalid_argument);
}

TEST_CASE("Koenig uses exactly max degree on a random bipartite corpus") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_bipartite(2 + seed % 5, 2 + (seed / 5) % 5,
                               3 + static_cast<int>(seed % 14), seed * 101 + 11);
    if (g.edge_count() == 0) continue;
    Colouring c = konig_edge_colour(g);
    auto rep = verify_edge_colouring(g, c);
    CHECK(rep.valid);
    CHECK(rep.colours_used == g.max_degree());
    CHECK(c.max_colour_used() <= g.max_degree());
  }
}

TEST_CASE("bipartite list colouring: single edge with list {5}") {
  Graph g = Graph::with_vertex_count(2, {{0, 1}});
  ColourLists lists;
  lists.set(0, 1, {5});
  Colouring c = list_edge_colour_bipartite(g, {{0}, {1}}, lists);
  CHECK(c.edge_colour(0, 1) == 5);
}

TEST_CASE("bipartite list colouring: claw with lists {1,2,3}") {
  const Graph claw = fx("claw").graph;
  ColourLists lists = ColourLists::uniform(claw, {1, 2, 3});
  Colouring c = list_edge_colour_bipartite(claw, {{0}, {1, 2, 3}}, lists);
  CHECK(verify_edge_colouring(claw, c).valid);
  std::set<int> seen;
  for (auto [e, col] : c.edge_colours) seen.insert(col);
  CHECK(seen == std::set<int>{1, 2, 3});
}

TEST_CASE("bipartite list colouring on C6 with per-X-vertex lists") {
  Graph c6 = cycle(6);
  ColourLists lists;
  lists.set(0, 1, {1, 2});
  lists.set(5, 0, {1, 2});
  lists.set(1, 2, {2, 3});
  lists.set(2, 3, {2, 3});
  lists.set(3, 4, {1, 3});
  lists.set(4, 5, {1, 3});
  CHECK(brute_list_edge_colouring_exists(c6, lists.lists));

  Colouring c = list_edge_colour_bipartite(c6, {{0, 2, 4}, {1, 3, 5}}, lists);
  CHECK(verify_edge_colouring(c6, c).valid);
  for (const auto& [e, col] : c.edge_colours) {
    const auto& l = lists.at(e.first, e.second);
    CHECK(std::binary_search(l.begin(), l.end(), col));
  }
}

TEST_CASE("bipartite list colouring rejects bad inputs precisely") {
  const Graph claw = fx("claw").graph;
  ColourLists small = ColourLists::uniform(claw, {1, 2});
  CHECK_THROWS_WITH_AS(
      list_edge_colour_bipartite(claw, {{0}, {1, 2, 3}}, small),
      doctest::Contains("too small"), std::invalid_argument);

  ColourLists uneven = ColourLists::uniform(claw, {1, 2, 3});
  uneven.set(0, 1, {4, 5, 6});
  CHECK_THROWS_WITH_AS(
      list_edge_colour_bipartite(claw, {{0}, {1, 2, 3}}, uneven),
      doctest::Contains("not uniform"), std::invalid_argument);

  CHECK_THROWS_WITH_AS(
      list_edge_colour_bipartite(claw, {{1, 2, 3}, {0}},
                                 ColourLists::uniform(claw, {1, 2, 3})),
      doctest::Contains("outside X"), std::invalid_argument);
}

TEST_CASE("2-sparse list colouring on theta, K2,3 and C5") {
  const Graph theta = fx("theta").graph;
  ColourLists lists = ColourLists::uniform(theta, {1, 2, 3});
  CHECK(brute_list_edge_colouring_exists(theta, lists.lists));
  Colouring c = list_edge_colour_2sparse(theta, std::vector<VertexId>{0, 1}, lists);
  CHECK(verify_edge_colouring(theta, c).valid);

  const Graph k23 = fx("k23").graph;
  Colouring ck = list_edge_colour_2sparse(k23, std::vector<VertexId>{0, 1},
                                          ColourLists::uniform(k23, {1, 2, 3}));
  auto rep = verify_edge_colouring(k23, ck);
  CHECK(rep.valid);
  CHECK(rep.colours_used <= 3);

  Graph c5 = cycle(5);
  Colouring cc = list_edge_colour_2sparse(c5, std::vector<VertexId>{},
                                          ColourLists::uniform(c5, {1, 2, 3}));
  CHECK(verify_edge_colouring(c5, cc).valid);

  CHECK_THROWS_AS(list_edge_colour_2sparse(c5, std::vector<VertexId>{},
                                           ColourLists::uniform(c5, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("edge colouring of 2-sparse graphs hits max degree exactly") {
  for (const char* name : {"claw", "k23", "subdivided_k4", "k24", "theta"}) {
    const Fixture& f = fx(name);
    Colouring c = edge_colour_2sparse(f.graph);
    auto rep = verify_edge_colouring(f.graph, c);
    CHECK(rep.valid);
    CHECK(c.palette_size == f.max_degree);
    CHECK(c.max_colour_used() <= f.max_degree);
  }
  CHECK_THROWS_AS(edge_colour_2sparse(cycle(6)), std::invalid_argument);
  CHECK_THROWS_AS(edge_colour_2sparse(fx("k4").graph), std::invalid_argument);
}

TEST_CASE("edge colouring of random 2-sparse instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = generate_chordless(10 + static_cast<int>(seed % 20), seed,
                                 GenProfile::sparse);
    Colouring c = edge_colour_2sparse(g);
    CHECK(verify_edge_colouring(g, c).valid);
    CHECK(c.max_colour_used() <= g.max_degree());
  }
}

TEST_CASE("delta4 total extension on stars and K2,4") {
  const Graph star4 = fx("star4").graph;
  std::map<VertexId, int> pre{{0, 1}};
  ColourLists lists = ColourLists::uniform(star4, {2, 3, 4, 5});
  Colouring c = total_colour_2sparse_delta4(star4, std::vector<VertexId>{0}, pre, lists);
  CHECK(verify_total_colouring(star4, c).valid);
  CHECK(c.vertex_colour(0) == 1);
  for (VertexId leaf : {1, 2, 3, 4}) {
    CHECK(c.vertex_colour(leaf) != 1);
    CHECK(c.vertex_colour(leaf) != c.edge_colour(0, leaf));
  }

  const Graph k24 = fx("k24").graph;
  std::map<VertexId, int> pre2{{0, 1}, {1, 1}};
  Colouring c2 = total_colour_2sparse_delta4(k24, std::vector<VertexId>{0, 1}, pre2,
                                             ColourLists::uniform(k24, {2, 3, 4, 5}));
  CHECK(verify_total_colouring(k24, c2).valid);
  CHECK(c2.palette_size == 5);

  // double star: the two centres are adjacent, so s is not stable
  Graph dstar = Graph::with_vertex_count(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  std::map<VertexId, int> pre3{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(
      total_colour_2sparse_delta4(dstar, std::vector<VertexId>{0, 1}, pre3,
                                  ColourLists::uniform(dstar, {3, 4, 5}), 5),
      std::invalid_argument);
}

TEST_CASE("path extension reproduces the explicit small cases") {
  // k = 3: the two precoloured edges meet at p2, so the consistent canonical
  // frame is 1,2,3,1; the lone interior vertex takes Colour 4
  std::vector<VertexId> p3{0, 1, 2};
  Colouring c3 = extend_path_total(p3, 1, 2, 3, 1);
  CHECK(c3.vertex_colour(1) == 4);

  std::vector<VertexId> p4{0, 1, 2, 3};
  Colouring c4 = extend_path_total(p4, 1, 2, 3, 1);
  CHECK(c4.vertex_colour(1) == 3);
  CHECK(c4.edge_colour(1, 2) == 1);
  CHECK(c4.vertex_colour(2) == 4);

  std::vector<VertexId> p5{0, 1, 2, 3, 4};
  Colouring c5 = extend_path_total(p5, 1, 2, 2, 1);
  CHECK(c5.vertex_colour(1) == 4);
  CHECK(c5.edge_colour(1, 2) == 3);
  CHECK(c5.edge_colour(2, 3) == 1);
  CHECK(c5.vertex_colour(3) == 4);
}

TEST_CASE("path extension is exhaustively correct and preserves the frame") {
  for (int k = 3; k <= 9; ++k) {
    std::vector<VertexId> verts(k);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) verts[i] = i;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    Graph pg = Graph::with_vertex_count(k, edges);

    int cases = 0;
    for (int cv = 1; cv <= 4; ++cv)
      for (int ce1 = 1; ce1 <= 4; ++ce1)
        for (int ce2 = 1; ce2 <= 4; ++ce2) {
          if (ce1 == cv || ce2 == cv) continue;
          if (k == 3 && ce1 == ce2) continue;
          Colouring c = extend_path_total(verts, cv, ce1, ce2, cv);
          CHECK(c.vertex_colour(0) == cv);
          CHECK(c.vertex_colour(k - 1) == cv);
          CHECK(c.edge_colour(0, 1) == ce1);
          CHECK(c.edge_colour(k - 2, k - 1) == ce2);
          CHECK(c.max_colour_used() <= 4);
          CHECK(verify_total_colouring(pg, c).valid);
          ++cases;
        }
    CHECK(cases == (k == 3 ? 24 : 36));
  }
  std::vector<VertexId> p3{0, 1, 2};
  CHECK_THROWS_AS(extend_path_total(p3, 1, 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_path_total(p3, 1, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(extend_path_total(std::vector<VertexId>{0, 1}, 1, 2, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("cubic total colouring, anchored and not") {
  const Graph k23 = fx("k23").graph;
  CubicAnchor anchor{2, 0, 1, 1, 1, 2, 3};
  Colouring c = total_colour_2sparse_cubic(k23, anchor);
  CHECK(verify_total_colouring(k23, c).valid);
  CHECK(c.vertex_colour(0) == 1);
  CHECK(c.vertex_colour(1) == 1);
  CHECK(c.edge_colour(0, 2) == 2);
  CHECK(c.edge_colour(2, 1) == 3);
  CHECK(c.max_colour_used() <= 4);

  // permuted anchor colours are honoured as given
  CubicAnchor shifted{2, 0, 1, 2, 2, 4, 1};
  Colouring cs = total_colour_2sparse_cubic(k23, shifted);
  CHECK(verify_total_colouring(k23, cs).valid);
  CHECK(cs.vertex_colour(0) == 2);
  CHECK(cs.edge_colour(0, 2) == 4);
  CHECK(cs.edge_colour(2, 1) == 1);

  const Graph theta = fx("theta").graph;
  Colouring ct = total_colour_2sparse_cubic(theta, std::nullopt);
  CHECK(verify_total_colouring(theta, ct).valid);
  CHECK(ct.max_colour_used() <= 4);
  // every high-degree vertex carries Colour 1
  for (VertexId v : stable_high_degree_set(theta)) CHECK(ct.vertex_colour(v) == 1);

  // anchor whose cut endpoint has degree 2 is rejected
  CubicAnchor bad{4, 0, 5, 1, 1, 2, 3};
  CHECK_THROWS_AS(total_colour_2sparse_cubic(fx("theta").graph, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(total_colour_2sparse_cubic(cycle(6), std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("total colouring of 2-sparse graphs") {
  Colouring claw = total_colour_2sparse(fx("claw").graph);
  CHECK(verify_total_colouring(fx("claw").graph, claw).valid);
  CHECK(claw.palette_size == 4);

  Colouring c6 = total_colour_2sparse(cycle(6));
  CHECK(verify_total_colouring(cycle(6), c6).valid);
  CHECK(c6.palette_size == 4);

  Colouring k24 = total_colour_2sparse(fx("k24").graph);
  CHECK(verify_total_colouring(fx("k24").graph, k24).valid);
  CHECK(k24.palette_size == 5);
  CHECK(k24.max_colour_used() <= 5);

  CHECK_THROWS_AS(total_colour_2sparse(fx("k4").graph), std::invalid_argument);
}

TEST_CASE("total colouring of random 2-sparse instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = generate_chordless(10 + static_cast<int>(seed % 25), seed + 1,
                                 GenProfile::sparse);
    Colouring c = total_colour_2sparse(g);
    CHECK(verify_total_colouring(g, c).valid);
    CHECK(c.max_colour_used() <= std::max(g.max_degree() + 1, 4));
  }
}
