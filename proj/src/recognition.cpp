#include "chordless/recognition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chordless {

namespace {

// ---------------------------------------------------------------------------
// co-cyclic test: do x and y lie on a common cycle of g minus the edge xy?
// Single lowpoint DFS with an edge stack; every popped block is scanned for
// both endpoints. Scratch is reused across the per-edge loop of is_chordless.
// ---------------------------------------------------------------------------

struct CoCyclicScratch {
  std::vector<int> disc, low, parent;
  std::vector<std::pair<int, size_t>> frames;
  std::vector<std::pair<int, int>> edge_stack;  // index pairs

  void reset(int n) {
    disc.assign(n, -1);
    low.assign(n, 0);
    parent.assign(n, -1);
    frames.clear();
    edge_stack.clear();
  }
};

bool co_cyclic_minus_edge(const Graph& g, int xi, int yi, CoCyclicScratch& ws) {
  const int n = g.vertex_count();
  ws.reset(n);
  int timer = 0;

  ws.frames.emplace_back(xi, 0);
  ws.disc[xi] = ws.low[xi] = timer++;
  while (!ws.frames.empty()) {
    auto& [v, pos] = ws.frames.back();
    const auto nbrs = g.neighbors_by_index(v);
    if (pos < nbrs.size()) {
      int w = nbrs[pos++];
      if ((v == xi && w == yi) || (v == yi && w == xi)) continue;  // excluded edge
      if (ws.disc[w] == -1) {
        ws.edge_stack.emplace_back(v, w);
        ws.parent[w] = v;
        ws.disc[w] = ws.low[w] = timer++;
        ws.frames.emplace_back(w, 0);
      } else if (w != ws.parent[v] && ws.disc[w] < ws.disc[v]) {
        ws.edge_stack.emplace_back(v, w);
        ws.low[v] = std::min(ws.low[v], ws.disc[w]);
      }
    } else {
      ws.frames.pop_back();
      int p = ws.parent[v];
      if (p == -1) continue;
      ws.low[p] = std::min(ws.low[p], ws.low[v]);
      if (ws.low[v] >= ws.disc[p]) {
        bool has_x = false, has_y = false;
        while (!ws.edge_stack.empty()) {
          auto [s, t] = ws.edge_stack.back();
          ws.edge_stack.pop_back();
          has_x = has_x || s == xi || t == xi;
          has_y = has_y || s == yi || t == yi;
          if ((s == p && t == v) || (s == v && t == p)) break;
        }
        if (has_x && has_y) return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// two internally disjoint x-y paths in g minus the edge xy, via unit-capacity
// flow with split vertices. Used only to reconstruct a chord witness.
// ---------------------------------------------------------------------------

struct FlowNet {
  std::vector<int> to, cap, nxt, head;

  void init(int nodes) { head.assign(nodes, -1); }
  void add(int u, int v, int c) {
    to.push_back(v);
    cap.push_back(c);
    nxt.push_back(head[u]);
    head[u] = static_cast<int>(to.size()) - 1;
  }
  void add_pair(int u, int v, int c) {
    add(u, v, c);
    add(v, u, 0);
  }
};

std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_disjoint_paths_minus_edge(const Graph& g, int xi, int yi) {
  const int n = g.vertex_count();
  auto node_in = [](int v) { return 2 * v; };
  auto node_out = [](int v) { return 2 * v + 1; };

  FlowNet net;
  net.init(2 * n);
  for (int v = 0; v < n; ++v)
    net.add_pair(node_in(v), node_out(v), (v == xi || v == yi) ? 2 : 1);
  for (const Edge& e : g.edges()) {
    int u = g.index_of(e.first), v = g.index_of(e.second);
    if ((u == xi && v == yi) || (u == yi && v == xi)) continue;
    net.add_pair(node_out(u), node_in(v), 1);
    net.add_pair(node_out(v), node_in(u), 1);
  }

  const int src = node_out(xi), snk = node_in(yi);
  std::vector<int> parent_arc(2 * n);
  int flow = 0;
  for (int round = 0; round < 2; ++round) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::vector<int> queue{src};
    parent_arc[src] = -2;
    for (size_t qi = 0; qi < queue.size() && parent_arc[snk] == -1; ++qi) {
      int u = queue[qi];
      for (int a = net.head[u]; a != -1; a = net.nxt[a]) {
        if (net.cap[a] > 0 && parent_arc[net.to[a]] == -1) {
          parent_arc[net.to[a]] = a;
          queue.push_back(net.to[a]);
        }
      }
    }
    if (parent_arc[snk] == -1) break;
    for (int v = snk; v != src;) {
      int a = parent_arc[v];
      net.cap[a] -= 1;
      net.cap[a ^ 1] += 1;
      v = net.to[a ^ 1];
    }
    ++flow;
  }
  if (flow < 2) return std::nullopt;

  // Walk the two unit flows from the source. Arcs with cap 0 on a forward
  // edge-arc carry flow; consume them so the walks stay disjoint.
  auto walk = [&]() {
    std::vector<int> path{xi};
    int node = src;
    while (node != snk) {
      int chosen = -1;
      for (int a = net.head[node]; a != -1; a = net.nxt[a]) {
        if ((a & 1) == 0 && net.cap[a] == 0) {
          chosen = a;
          break;
        }
      }
      net.cap[chosen] = 1;  // consume
      node = net.to[chosen];
      if (node % 2 == 0 && node / 2 != path.back()) path.push_back(node / 2);
    }
    return path;
  };
  std::vector<int> p1 = walk();
  std::vector<int> p2 = walk();
  return std::make_pair(p1, p2);
}

}  // namespace

ChordCheck is_chordless(const Graph& g) { return is_chordless(g, true); }

ChordCheck is_chordless(const Graph& g, bool parallel) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int found = std::numeric_limits<int>::max();

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      CoCyclicScratch ws;
      int local = std::numeric_limits<int>::max();
#pragma omp for schedule(dynamic, 8)
      for (int i = 0; i < m; ++i) {
        int xi = g.index_of(edges[i].first);
        int yi = g.index_of(edges[i].second);
        if (co_cyclic_minus_edge(g, xi, yi, ws)) local = std::min(local, i);
      }
#pragma omp critical
      found = std::min(found, local);
    }
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    CoCyclicScratch ws;
    for (int i = 0; i < m && found == std::numeric_limits<int>::max(); ++i) {
      int xi = g.index_of(edges[i].first);
      int yi = g.index_of(edges[i].second);
      if (co_cyclic_minus_edge(g, xi, yi, ws)) found = i;
    }
  }

  if (found == std::numeric_limits<int>::max()) return {true, std::nullopt};

  const Edge chord = edges[found];
  int xi = g.index_of(chord.first), yi = g.index_of(chord.second);
  auto paths = two_disjoint_paths_minus_edge(g, xi, yi);
  if (!paths) throw std::logic_error("is_chordless: witness reconstruction failed");

  ChordWitness w;
  w.chord = chord;
  for (int v : paths->first) w.cycle.push_back(g.id_of(v));
  for (size_t i = paths->second.size() - 2; i >= 1; --i)
    w.cycle.push_back(g.id_of(paths->second[i]));
  return {false, std::move(w)};
}

TwoSparseCheck is_2sparse(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.degree(e.first) >= 3 && g.degree(e.second) >= 3) return {false, e};
  return {true, std::nullopt};
}

std::vector<VertexId> stable_high_degree_set(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertex_ids())
    if (g.degree(v) >= 3) out.push_back(v);
  return out;
}

Graph one_end_bipartite(const Graph& g, std::span<const VertexId> s) {
  std::vector<VertexId> sv(s.begin(), s.end());
  std::sort(sv.begin(), sv.end());
  for (VertexId v : sv) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("one_end_bipartite: unknown vertex " + std::to_string(v));
    for (VertexId w : g.neighbors(v))
      if (std::binary_search(sv.begin(), sv.end(), w))
        throw std::invalid_argument("one_end_bipartite: s is not stable, edge " +
                                    std::to_string(v) + "-" + std::to_string(w));
  }
  std::vector<VertexId> verts = sv;
  std::vector<Edge> kept;
  for (VertexId v : sv)
    for (VertexId w : g.neighbors(v)) {
      verts.push_back(w);
      kept.push_back(make_edge(v, w));
    }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return Graph(std::move(verts), kept);
}

namespace {

bool side_is_path(const Graph& side) {
  if (!side.is_connected()) return false;
  if (side.edge_count() != side.vertex_count() - 1) return false;
  return side.max_degree() <= 2;
}

}  // namespace

void validate_split(const Graph& g, const Split& s) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("invalid split: " + why);
  };
  if (s.x.empty() || s.y.empty()) fail("X and Y must be nonempty");
  if (!g.has_vertex(s.a) || !g.has_vertex(s.b) || s.a == s.b) fail("bad cut pair");
  if (g.has_edge(s.a, s.b)) fail("a and b are adjacent");

  std::vector<VertexId> all;
  all.reserve(s.x.size() + s.y.size() + 2);
  all.insert(all.end(), s.x.begin(), s.x.end());
  all.insert(all.end(), s.y.begin(), s.y.end());
  all.push_back(s.a);
  all.push_back(s.b);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    fail("X, Y, {a,b} are not disjoint");
  if (all != g.vertex_ids()) fail("X, Y, {a,b} do not cover the vertices");

  auto in_x = [&](VertexId v) { return std::binary_search(s.x.begin(), s.x.end(), v); };
  auto in_y = [&](VertexId v) { return std::binary_search(s.y.begin(), s.y.end(), v); };
  for (const Edge& e : g.edges()) {
    bool cross = (in_x(e.first) && in_y(e.second)) || (in_y(e.first) && in_x(e.second));
    if (cross) fail("edge joins X to Y");
  }

  for (const auto* side : {&s.x, &s.y}) {
    std::vector<VertexId> verts = *side;
    verts.push_back(s.a);
    verts.push_back(s.b);
    Graph sg = g.induced_subgraph(verts);
    // an a-b path exists iff a and b are connected within the side graph
    bool linked = false;
    for (const auto& comp : sg.connected_components())
      if (std::binary_search(comp.begin(), comp.end(), s.a) &&
          std::binary_search(comp.begin(), comp.end(), s.b))
        linked = true;
    if (!linked) fail("side has no a-b path");
    if (side_is_path(sg)) fail("side is a chordless path");
  }
}

// ---------------------------------------------------------------------------
// proper-2-cutset scan
//
// For a non-adjacent pair {a,b} the components C_1..C_k of G-{a,b} determine
// every split: X must be a union of components. The minimum |X| is attained
// either by a single non-path component or by the union of the two smallest
// path components (a side made of >= 2 components always contains a cycle
// through a and b, so only single-component sides can degenerate to paths).
// ---------------------------------------------------------------------------

namespace {

struct CompInfo {
  int size = 0;
  long deg_sum = 0;
  int max_deg = 0;
  int att_a = 0;  // edges from a into the component
  int att_b = 0;
  VertexId min_id = -1;
  bool path = false;
};

struct Candidate {
  bool valid = false;
  int x_size = 0;
  VertexId a = -1, b = -1;
  VertexId x_min = -1;
  int comp1 = -1, comp2 = -1;  // selected component(s); comp2 >= 0 for a union
};

// ordering used by find_extremal_split: minimum |X| first
bool better_min_x(const Candidate& lhs, const Candidate& rhs) {
  if (!rhs.valid) return lhs.valid;
  if (!lhs.valid) return false;
  auto key = [](const Candidate& c) {
    return std::make_tuple(c.x_size, c.a, c.b, c.x_min);
  };
  return key(lhs) < key(rhs);
}

// ordering used by find_proper_2cutset: first (a,b) pair in id order
bool better_pair_order(const Candidate& lhs, const Candidate& rhs) {
  if (!rhs.valid) return lhs.valid;
  if (!lhs.valid) return false;
  auto key = [](const Candidate& c) {
    return std::make_tuple(c.a, c.b, c.x_size, c.x_min);
  };
  return key(lhs) < key(rhs);
}

struct PairScan {
  const Graph& g;
  int n;
  std::vector<int> comp_of;
  std::vector<int> comp_stamp;
  int epoch = 0;
  std::vector<int> queue;
  std::vector<CompInfo> comps;

  explicit PairScan(const Graph& graph)
      : g(graph), n(graph.vertex_count()), comp_of(n, -1), comp_stamp(n, -1) {}

  int comp_at(int v) const { return comp_stamp[v] == epoch ? comp_of[v] : -1; }

  // Decomposes G-{a,b} into components and picks the pair's best candidate X.
  Candidate test_pair(int ai, int bi) {
    Candidate none;
    const auto a_nbrs = g.neighbors_by_index(ai);
    if (std::binary_search(a_nbrs.begin(), a_nbrs.end(), bi)) return none;

    ++epoch;
    comps.clear();
    for (int s = 0; s < n; ++s) {
      if (s == ai || s == bi || comp_stamp[s] == epoch) continue;
      int cid = static_cast<int>(comps.size());
      CompInfo info;
      info.min_id = g.id_of(s);
      comp_stamp[s] = epoch;
      comp_of[s] = cid;
      queue.clear();
      queue.push_back(s);
      while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++info.size;
        int dv = g.degree_by_index(v);
        info.deg_sum += dv;
        info.max_deg = std::max(info.max_deg, dv);
        for (int w : g.neighbors_by_index(v)) {
          if (w == ai || w == bi || comp_stamp[w] == epoch) continue;
          comp_stamp[w] = epoch;
          comp_of[w] = cid;
          queue.push_back(w);
        }
      }
      comps.push_back(info);
    }

    const int k = static_cast<int>(comps.size());
    if (k < 2) return none;

    for (int w : a_nbrs)
      if (w != bi) ++comps[comp_at(w)].att_a;
    for (int w : g.neighbors_by_index(bi))
      if (w != ai) ++comps[comp_at(w)].att_b;

    int path_count = 0;
    for (auto& c : comps) {
      if (c.att_a == 0 || c.att_b == 0) return none;  // needs 2-connected input
      long inner = (c.deg_sum - c.att_a - c.att_b) / 2;
      c.path = c.att_a == 1 && c.att_b == 1 && c.max_deg <= 2 && inner == c.size - 1;
      if (c.path) ++path_count;
    }

    const VertexId a_id = g.id_of(ai), b_id = g.id_of(bi);
    Candidate best;
    auto consider = [&](int x_size, VertexId x_min, int c1, int c2) {
      Candidate cand{true, x_size, a_id, b_id, x_min, c1, c2};
      if (!best.valid || std::make_pair(cand.x_size, cand.x_min) <
                             std::make_pair(best.x_size, best.x_min))
        best = cand;
    };

    // single non-path components
    for (int i = 0; i < k; ++i) {
      if (comps[i].path) continue;
      bool rest_ok = k >= 3;
      if (k == 2) rest_ok = !comps[1 - i].path;
      if (rest_ok) consider(comps[i].size, comps[i].min_id, i, -1);
    }

    // union of the two smallest path components
    if (path_count >= 2 && k >= 3) {
      int p1 = -1, p2 = -1;
      auto key = [&](int i) { return std::make_pair(comps[i].size, comps[i].min_id); };
      for (int i = 0; i < k; ++i) {
        if (!comps[i].path) continue;
        if (p1 == -1 || key(i) < key(p1)) {
          p2 = p1;
          p1 = i;
        } else if (p2 == -1 || key(i) < key(p2)) {
          p2 = i;
        }
      }
      bool rest_ok = k >= 4;
      if (k == 3) {
        int other = 0 + 1 + 2 - p1 - p2;
        rest_ok = !comps[other].path;
      }
      if (rest_ok)
        consider(comps[p1].size + comps[p2].size,
                 std::min(comps[p1].min_id, comps[p2].min_id), p1, p2);
    }
    return best;
  }

  // Materialises the split for a previously found candidate.
  Split build(const Candidate& c) {
    int ai = g.index_of(c.a), bi = g.index_of(c.b);
    Candidate check = test_pair(ai, bi);  // refresh comp_of for this pair
    (void)check;
    Split s;
    s.a = c.a;
    s.b = c.b;
    for (int v = 0; v < n; ++v) {
      if (v == ai || v == bi) continue;
      int cid = comp_at(v);
      if (cid == c.comp1 || cid == c.comp2)
        s.x.push_back(g.id_of(v));
      else
        s.y.push_back(g.id_of(v));
    }
    return s;
  }
};

// articulation points of g minus one vertex, as indices
void articulation_points_minus_vertex(const Graph& g, int skip, CoCyclicScratch& ws,
                                      std::vector<int>& out) {
  const int n = g.vertex_count();
  ws.reset(n);
  out.clear();
  std::vector<int> child_count(n, 0);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (root == skip || ws.disc[root] != -1) continue;
    ws.frames.emplace_back(root, 0);
    ws.disc[root] = ws.low[root] = timer++;
    while (!ws.frames.empty()) {
      auto& [v, pos] = ws.frames.back();
      const auto nbrs = g.neighbors_by_index(v);
      if (pos < nbrs.size()) {
        int w = nbrs[pos++];
        if (w == skip) continue;
        if (ws.disc[w] == -1) {
          ws.parent[w] = v;
          ++child_count[v];
          ws.disc[w] = ws.low[w] = timer++;
          ws.frames.emplace_back(w, 0);
        } else if (w != ws.parent[v]) {
          ws.low[v] = std::min(ws.low[v], ws.disc[w]);
        }
      } else {
        ws.frames.pop_back();
        int p = ws.parent[v];
        if (p == -1) continue;
        ws.low[p] = std::min(ws.low[p], ws.low[v]);
        if (ws.parent[p] != -1 && ws.low[v] >= ws.disc[p]) {
          if (out.empty() || out.back() != p) out.push_back(p);
        }
      }
    }
    if (child_count[root] > 1) out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

using Better = bool (*)(const Candidate&, const Candidate&);

Candidate scan_reference(const Graph& g, Better better) {
  PairScan scan(g);
  Candidate best;
  const int n = g.vertex_count();
  for (int ai = 0; ai < n; ++ai)
    for (int bi = ai + 1; bi < n; ++bi) {
      Candidate c = scan.test_pair(ai, bi);
      if (better(c, best)) best = c;
    }
  return best;
}

Candidate scan_fast(const Graph& g, Better better) {
  const int n = g.vertex_count();
  Candidate best;
#ifdef _OPENMP
#pragma omp parallel
  {
    PairScan scan(g);
    CoCyclicScratch ws;
    std::vector<int> artics;
    Candidate local;
#pragma omp for schedule(dynamic, 4)
    for (int ai = 0; ai < n; ++ai) {
      articulation_points_minus_vertex(g, ai, ws, artics);
      for (int bi : artics) {
        if (bi <= ai) continue;
        Candidate c = scan.test_pair(ai, bi);
        if (better(c, local)) local = c;
      }
    }
#pragma omp critical
    if (better(local, best)) best = local;
  }
#else
  PairScan scan(g);
  CoCyclicScratch ws;
  std::vector<int> artics;
  for (int ai = 0; ai < n; ++ai) {
    articulation_points_minus_vertex(g, ai, ws, artics);
    for (int bi : artics) {
      if (bi <= ai) continue;
      Candidate c = scan.test_pair(ai, bi);
      if (better(c, best)) best = c;
    }
  }
#endif
  return best;
}

std::optional<Split> run_scan(const Graph& g, CutsetScan scan, Better better) {
  Candidate best = scan == CutsetScan::serial_reference ? scan_reference(g, better)
                                                        : scan_fast(g, better);
  if (!best.valid) return std::nullopt;
  PairScan builder(g);
  Split s = builder.build(best);
  validate_split(g, s);
  return s;
}

}  // namespace

std::optional<Split> find_proper_2cutset(const Graph& g, CutsetScan scan) {
  if (!g.is_biconnected())
    throw std::invalid_argument("find_proper_2cutset: graph is not 2-connected");
  return run_scan(g, scan, better_pair_order);
}

std::optional<Split> find_extremal_split(const Graph& g, CutsetScan scan) {
  if (!g.is_biconnected())
    throw std::invalid_argument("find_extremal_split: graph is not 2-connected");
  if (is_2sparse(g).two_sparse)
    throw std::invalid_argument("find_extremal_split: graph is 2-sparse");
  return run_scan(g, scan, better_min_x);
}

std::pair<SplitBlock, SplitBlock> build_blocks(const Graph& g, const Split& s) {
  validate_split(g, s);
  VertexId max_id = g.vertex_ids().back();

  auto make_block = [&](const std::vector<VertexId>& side, VertexId marker,
                        BlockSide tag) {
    std::vector<VertexId> verts = side;
    verts.push_back(s.a);
    verts.push_back(s.b);
    Graph sub = g.induced_subgraph(verts);
    std::vector<VertexId> all = sub.vertex_ids();
    all.push_back(marker);
    std::vector<Edge> edges = sub.edges();
    edges.push_back(make_edge(marker, s.a));
    edges.push_back(make_edge(marker, s.b));
    return SplitBlock{Graph(std::move(all), edges), marker, tag, {s.a, s.b}};
  };

  return {make_block(s.x, max_id + 1, BlockSide::x),
          make_block(s.y, max_id + 2, BlockSide::y)};
}

}  // namespace chordless
