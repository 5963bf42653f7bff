#include "chordless/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "chordless/recognition.hpp"

namespace chordless {

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

VerificationReport verify_edge_colouring(const Graph& g, const Colouring& c) {
  VerificationReport rep;
  std::set<int> used;
  for (const Edge& e : g.edges()) used.insert(c.edge_colour(e.first, e.second));
  rep.colours_used = static_cast<int>(used.size());

  for (VertexId v : g.vertex_ids()) {
    const auto nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int ci = c.edge_colour(v, nbrs[i]);
        int cj = c.edge_colour(v, nbrs[j]);
        if (ci == cj)
          rep.violations.push_back(
              {edge_element(v, nbrs[i]), edge_element(v, nbrs[j]), ci});
      }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

VerificationReport verify_total_colouring(const Graph& g, const Colouring& c) {
  VerificationReport rep;
  std::set<int> used;
  for (const Edge& e : g.edges()) used.insert(c.edge_colour(e.first, e.second));
  for (VertexId v : g.vertex_ids()) used.insert(c.vertex_colour(v));
  rep.colours_used = static_cast<int>(used.size());

  for (const Edge& e : g.edges()) {
    if (c.vertex_colour(e.first) == c.vertex_colour(e.second))
      rep.violations.push_back({vertex_element(e.first), vertex_element(e.second),
                                c.vertex_colour(e.first)});
    for (VertexId end : {e.first, e.second})
      if (c.vertex_colour(end) == c.edge_colour(e.first, e.second))
        rep.violations.push_back({vertex_element(end), edge_element(e.first, e.second),
                                  c.vertex_colour(end)});
  }
  for (VertexId v : g.vertex_ids()) {
    const auto nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int ci = c.edge_colour(v, nbrs[i]);
        int cj = c.edge_colour(v, nbrs[j]);
        if (ci == cj)
          rep.violations.push_back(
              {edge_element(v, nbrs[i]), edge_element(v, nbrs[j]), ci});
      }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// exact oracles: backtracking over a conflict graph of elements with
// forward checking; one maximum-degree vertex is pinned for symmetry
// ---------------------------------------------------------------------------

namespace {

struct ExactSolver {
  int count = 0;
  std::vector<std::vector<int>> conflicts;
  std::vector<int> fixed;  // 0 = free, else pinned colour

  // true iff a proper k-colouring extending the pinned prefix exists
  bool solvable(int k) const {
    if (k > 31) throw std::invalid_argument("oracle: palette too large");
    for (int e = 0; e < count; ++e)
      if (fixed[e] > k) return false;

    std::vector<uint32_t> banned(count, 0);  // bitmask of excluded colours
    std::vector<int> colour(count, 0);
    const uint32_t all = (k >= 31) ? 0x7fffffffu : ((1u << (k + 1)) - 2u);  // bits 1..k

    std::vector<std::pair<int, int>> trail;  // (element, previous banned) undo log
    std::vector<int> order;
    int assigned = 0;

    auto place = [&](int e, int c) {
      colour[e] = c;
      ++assigned;
      for (int f : conflicts[e])
        if (!colour[f]) {
          trail.emplace_back(f, banned[f]);
          banned[f] |= (1u << c);
        }
    };
    auto unplace = [&](int e, size_t mark) {
      while (trail.size() > mark) {
        banned[trail.back().first] = trail.back().second;
        trail.pop_back();
      }
      colour[e] = 0;
      --assigned;
    };

    for (int e = 0; e < count; ++e)
      if (fixed[e]) {
        if (banned[e] & (1u << fixed[e])) return false;
        place(e, fixed[e]);
      }

    int max_used = 0;
    for (int e = 0; e < count; ++e) max_used = std::max(max_used, fixed[e]);

    struct Frame {
      int element;
      uint32_t remaining;
      size_t mark;
      int prev_max;
    };
    std::vector<Frame> stack;

    auto pick = [&]() {
      int best = -1, best_avail = 1 << 30;
      for (int e = 0; e < count; ++e) {
        if (colour[e]) continue;
        int avail = __builtin_popcount(all & ~banned[e]);
        if (avail < best_avail) {
          best_avail = avail;
          best = e;
        }
      }
      return best;
    };

    auto options = [&](int e, int cap) {
      // colours beyond max_used+1 are interchangeable: try at most one fresh one
      uint32_t open = all & ~banned[e];
      uint32_t limit_mask =
          (cap >= 31) ? 0xffffffffu : ((1u << (std::min(cap, k) + 1)) - 1u);
      return open & limit_mask;
    };

    while (true) {
      if (assigned == count) return true;
      int e = pick();
      uint32_t opts = options(e, max_used + 1);
      if (opts == 0) {
        // backtrack
        while (!stack.empty()) {
          Frame& fr = stack.back();
          unplace(fr.element, fr.mark);
          max_used = fr.prev_max;
          fr.remaining &= fr.remaining - 1;  // drop the colour just tried
          uint32_t rem = fr.remaining;
          if (rem) {
            int c = __builtin_ctz(rem);
            fr.mark = trail.size();
            fr.prev_max = max_used;
            place(fr.element, c);
            max_used = std::max(max_used, c);
            break;
          }
          stack.pop_back();
        }
        if (stack.empty() && assigned <= std::count_if(fixed.begin(), fixed.end(),
                                                       [](int f) { return f > 0; }))
          return false;
        continue;
      }
      int c = __builtin_ctz(opts);
      stack.push_back({e, opts, trail.size(), max_used});
      place(e, c);
      max_used = std::max(max_used, c);
    }
  }
};

ExactSolver edge_solver(const Graph& g) {
  const int m = g.edge_count();
  if (m > 24) throw std::invalid_argument("oracle: too many edges for backtracking");
  ExactSolver s;
  s.count = m;
  s.conflicts.assign(m, {});
  s.fixed.assign(m, 0);
  const auto& edges = g.edges();
  auto edge_index = [&](VertexId u, VertexId v) {
    Edge e = make_edge(u, v);
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) -
                            edges.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge &a = edges[i], &b = edges[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second) {
        s.conflicts[i].push_back(j);
        s.conflicts[j].push_back(i);
      }
    }
  if (m > 0) {
    VertexId star = g.vertex_ids()[0];
    for (VertexId v : g.vertex_ids())
      if (g.degree(v) > g.degree(star)) star = v;
    int c = 1;
    for (VertexId w : g.neighbors(star)) s.fixed[edge_index(star, w)] = c++;
  }
  return s;
}

ExactSolver total_solver(const Graph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (n + m > 34) throw std::invalid_argument("oracle: too many elements for backtracking");
  // elements: 0..n-1 vertices (by index), n..n+m-1 edges
  ExactSolver s;
  s.count = n + m;
  s.conflicts.assign(s.count, {});
  s.fixed.assign(s.count, 0);
  const auto& edges = g.edges();
  auto edge_el = [&](VertexId u, VertexId v) {
    Edge e = make_edge(u, v);
    return n + static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) -
                                edges.begin());
  };
  auto link = [&](int a, int b) {
    s.conflicts[a].push_back(b);
    s.conflicts[b].push_back(a);
  };
  for (int i = 0; i < m; ++i) {
    link(g.index_of(edges[i].first), g.index_of(edges[i].second));
    link(g.index_of(edges[i].first), n + i);
    link(g.index_of(edges[i].second), n + i);
    for (int j = i + 1; j < m; ++j) {
      const Edge &a = edges[i], &b = edges[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second)
        link(n + i, n + j);
    }
  }
  if (n > 0) {
    VertexId star = g.vertex_ids()[0];
    for (VertexId v : g.vertex_ids())
      if (g.degree(v) > g.degree(star)) star = v;
    s.fixed[g.index_of(star)] = 1;
    int c = 2;
    for (VertexId w : g.neighbors(star)) s.fixed[edge_el(star, w)] = c++;
  }
  return s;
}

}  // namespace

int brute_force_chromatic_index(const Graph& g, int limit) {
  if (g.edge_count() == 0) return 0;
  ExactSolver s = edge_solver(g);
  for (int k = g.max_degree(); k <= limit; ++k)
    if (s.solvable(k)) return k;
  throw std::runtime_error("brute_force_chromatic_index: limit " +
                           std::to_string(limit) + " exceeded");
}

int brute_force_total_chromatic(const Graph& g, int limit) {
  if (g.empty()) return 0;
  ExactSolver s = total_solver(g);
  int lb = g.edge_count() ? g.max_degree() + 1 : 1;
  for (int k = lb; k <= limit; ++k)
    if (s.solvable(k)) return k;
  throw std::runtime_error("brute_force_total_chromatic: limit " +
                           std::to_string(limit) + " exceeded");
}

// ---------------------------------------------------------------------------
// isomorphism (small graphs) and the class-based enumerator
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> neighbour_degree_profile(const Graph& g) {
  std::vector<std::vector<int>> prof;
  for (VertexId v : g.vertex_ids()) {
    std::vector<int> row{g.degree(v)};
    for (VertexId w : g.neighbors(v)) row.push_back(g.degree(w));
    std::sort(row.begin() + 1, row.end());
    prof.push_back(std::move(row));
  }
  std::sort(prof.begin(), prof.end());
  return prof;
}

std::string invariant_key(const Graph& g) {
  std::string key = std::to_string(g.vertex_count()) + ";" +
                    std::to_string(g.edge_count()) + ";";
  for (const auto& row : neighbour_degree_profile(g)) {
    for (int d : row) key += std::to_string(d) + ",";
    key += "|";
  }
  return key;
}

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& image,
                    std::vector<char>& used, size_t pos,
                    const std::vector<int>& order) {
  if (pos == order.size()) return true;
  const int va = order[pos];
  const int na = a.vertex_count();
  (void)na;
  for (int vb = 0; vb < b.vertex_count(); ++vb) {
    if (used[vb]) continue;
    if (a.degree_by_index(va) != b.degree_by_index(vb)) continue;
    bool ok = true;
    for (size_t p = 0; p < pos && ok; ++p) {
      int ua = order[p];
      bool ea = std::binary_search(a.neighbors_by_index(va).begin(),
                                   a.neighbors_by_index(va).end(), ua);
      bool eb = std::binary_search(b.neighbors_by_index(vb).begin(),
                                   b.neighbors_by_index(vb).end(), image[ua]);
      if (ea != eb) ok = false;
    }
    if (!ok) continue;
    image[va] = vb;
    used[vb] = 1;
    if (extend_mapping(a, b, image, used, pos + 1, order)) return true;
    used[vb] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  if (neighbour_degree_profile(a) != neighbour_degree_profile(b)) return false;

  const int n = a.vertex_count();
  // map in BFS order from the highest-degree vertex for early pruning
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (pick == -1 || a.degree_by_index(v) > a.degree_by_index(pick)))
        pick = v;
    if (pick == -1) break;
    (void)root;
    std::vector<int> queue{pick};
    seen[pick] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order.push_back(v);
      for (int w : a.neighbors_by_index(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) == n) break;
  }
  while (static_cast<int>(order.size()) < n)
    for (int v = 0; v < n; ++v)
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  return extend_mapping(a, b, image, used, 0, order);
}

void enumerate_small_chordless(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("enumerate_small_chordless: n must be in 1..9");

  // connected chordless classes, grown one vertex at a time
  std::vector<Graph> level{Graph::with_vertex_count(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::map<std::string, std::vector<int>> buckets;  // key -> indices into next
    for (const Graph& base : level) {
      const int prev = k - 1;
      for (unsigned mask = 1; mask < (1u << prev); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < prev; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, prev);
        Graph cand = Graph::with_vertex_count(k, edges);
        if (!is_chordless(cand, false).chordless) continue;
        std::string key = invariant_key(cand);
        auto& bucket = buckets[key];
        bool dup = false;
        for (int idx : bucket)
          if (graphs_isomorphic(cand, next[idx])) {
            dup = true;
            break;
          }
        if (dup) continue;
        bucket.push_back(static_cast<int>(next.size()));
        next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  for (const Graph& g : level)
    if (!g.empty() && g.max_degree() >= 3) emit(g);
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // biased-but-portable draw in [0, bound)
  int below(int bound) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(bound)); }

 private:
  std::mt19937_64 eng_;
};

Graph generate_sparse(int n, Rng& rng) {
  if (n < 4) throw std::invalid_argument("generate_chordless: n must be at least 4");
  if (n < 7) {  // star: 2-sparse, chordless, max degree n-1 >= 3
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::with_vertex_count(n, edges);
  }
  int base_n = std::max(4, (2 * n) / 5);
  while (n - base_n > base_n * (base_n - 1) / 2) ++base_n;  // keep the base simple
  const int base_m = n - base_n;

  // spanning tree; the first three vertices hang off vertex 0 so the base
  // (and hence the subdivision) reaches max degree 3
  std::set<Edge> base;
  for (int v = 1; v < base_n; ++v) {
    int anchor = v <= 3 ? 0 : rng.below(v);
    base.insert(make_edge(anchor, v));
  }
  int guard = 0;
  while (static_cast<int>(base.size()) < base_m) {
    int u = rng.below(base_n), v = rng.below(base_n);
    if (u != v) base.insert(make_edge(u, v));
    if (++guard > 100 * base_m) {  // fall back to a scan when density is high
      for (int a = 0; a < base_n && static_cast<int>(base.size()) < base_m; ++a)
        for (int b = a + 1; b < base_n && static_cast<int>(base.size()) < base_m; ++b)
          base.insert(make_edge(a, b));
    }
  }

  std::vector<Edge> edges;
  int next_id = base_n;
  for (const Edge& e : std::vector<Edge>(base.begin(), base.end())) {
    edges.emplace_back(e.first, next_id);
    edges.emplace_back(next_id, e.second);
    ++next_id;
  }
  return Graph::with_vertex_count(n, edges);
}

Graph theta_start(int interiors1, int interiors2, int interiors3) {
  std::vector<Edge> edges;
  int next_id = 2;
  for (int len : {interiors1, interiors2, interiors3}) {
    VertexId prev = 0;
    for (int j = 0; j < len; ++j) {
      edges.emplace_back(prev, next_id);
      prev = next_id++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::with_vertex_count(next_id, edges);
}

Graph generate_composed(int n, Rng& rng) {
  if (n < 5)
    throw std::runtime_error("generate_chordless: composed profile needs n >= 5");

  if (n < 10) {  // plain generalized theta; too small to force a glue
    int t0 = n - 2;
    int i1 = 1 + rng.below(t0 - 2);
    int i2 = 1 + rng.below(t0 - i1 - 1);
    return theta_start(i1, i2, t0 - i1 - i2);
  }

  // Glues land on the two neighbours a, b of a degree-2 vertex whose
  // neighbours are non-adjacent. Any new cycle is then a fresh leg plus an
  // a-b path P of the old graph, and an off-path edge among P's vertices
  // would already have been a chord of the old cycle P + (a, mid, b); hence
  // the composition preserves chordlessness. The first glue sits next to
  // hub 0 and raises its neighbour to degree 4, breaking 2-sparseness.
  int t0 = std::min(n - 4, 4 + rng.below(6));
  int i1 = 1 + rng.below(t0 - 3);
  int i2 = 1 + rng.below(t0 - i1 - 2);
  int i3 = t0 - i1 - i2;  // >= 2
  Graph g = theta_start(i1, i2, i3);
  const VertexId forced_mid = 2 + i1 + i2 + 1;  // second interior of leg 3

  bool forced = false;
  while (g.vertex_count() < n) {
    int remaining = n - g.vertex_count();
    int chunk = std::min(remaining, 2 + rng.below(7));
    if (remaining - chunk == 1) chunk = remaining;

    bool glued = false;
    for (int attempt = 0; attempt < 100 && !glued; ++attempt) {
      VertexId mid = (!forced && attempt == 0)
                         ? forced_mid
                         : g.vertex_ids()[rng.below(g.vertex_count())];
      if (g.degree(mid) != 2) continue;
      const auto nbrs = g.neighbors(mid);
      VertexId a = nbrs[0], b = nbrs[1];
      if (g.has_edge(a, b)) continue;

      // two fresh a-b paths with ia and ib interior vertices
      int ia = 1 + rng.below(chunk - 1);
      int ib = chunk - ia;
      std::vector<Edge> glue_edges = g.edges();
      int fresh = g.vertex_ids().back() + 1;
      for (int leg : {ia, ib}) {
        VertexId prev = a;
        for (int j = 0; j < leg; ++j) {
          glue_edges.emplace_back(make_edge(prev, fresh));
          prev = fresh++;
        }
        glue_edges.emplace_back(make_edge(prev, b));
      }
      std::vector<VertexId> verts = g.vertex_ids();
      for (VertexId v = g.vertex_ids().back() + 1; v < fresh; ++v) verts.push_back(v);
      Graph cand(verts, glue_edges);
      if (!is_chordless(cand, false).chordless) continue;  // reject, never emit unverified
      g = std::move(cand);
      glued = true;
      if (mid == forced_mid) forced = true;
    }
    if (!glued)
      throw std::runtime_error("generate_chordless: retry budget exceeded while composing");
  }
  if (!forced)
    throw std::runtime_error("generate_chordless: could not break 2-sparseness");
  return g;
}

}  // namespace

Graph generate_chordless(int n, std::uint64_t seed, GenProfile profile) {
  if (n < 4) throw std::invalid_argument("generate_chordless: n must be at least 4");
  Rng rng(seed ^ (profile == GenProfile::sparse ? 0x5041525345ull : 0x434f4d50ull));
  return profile == GenProfile::sparse ? generate_sparse(n, rng)
                                       : generate_composed(n, rng);
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph::with_vertex_count(n, edges);
}

Graph complete_bipartite(int left, int right) {
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  return Graph::with_vertex_count(left + right, edges);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::with_vertex_count(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.push_back(make_edge(v, (v + 1) % 5));        // outer cycle
    edges.emplace_back(v, v + 5);                      // spokes
    edges.push_back(make_edge(v + 5, (v + 2) % 5 + 5));  // pentagram
  }
  return Graph::with_vertex_count(10, edges);
}

// two degree-3 vertices u, v joined by an edge; u-w and v-w each through two
// disjoint length-2 paths; the hub w has degree 4
Graph theta_pair() {
  // u=0 v=1 w=2 p=3 q=4 r=5 s=6
  return Graph::with_vertex_count(
      7, {{0, 1}, {0, 3}, {3, 2}, {0, 4}, {4, 2}, {1, 5}, {5, 2}, {1, 6}, {6, 2}});
}

// theta with hub-to-hub paths of lengths 2, 2, 3
Graph theta223() {
  return Graph::with_vertex_count(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
}

Graph subdivided_k4() {
  std::vector<Edge> edges;
  int next_id = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      edges.emplace_back(u, next_id);
      edges.emplace_back(next_id, v);
      ++next_id;
    }
  return Graph::with_vertex_count(10, edges);
}

// two thetas theta(u,w) and theta(v,z) joined by the edges uv and wz;
// max degree 3, 2-connected, chordless, not 2-sparse
Graph theta_chain() {
  // u=0 v=1 w=2 z=3 p=4 q=5 r=6 s=7
  return Graph::with_vertex_count(8, {{0, 1},
                                      {0, 4},
                                      {4, 2},
                                      {0, 5},
                                      {5, 2},
                                      {1, 6},
                                      {6, 3},
                                      {1, 7},
                                      {7, 3},
                                      {2, 3}});
}

// two theta-pair gadgets sharing the cut pair {u, w}
Graph theta_pair_chain() {
  std::vector<Edge> edges = theta_pair().edges();
  // second gadget: v'=7 p'=8 q'=9 r'=10 s'=11, with u'=0 and w'=2
  for (Edge e : std::vector<Edge>{
           {0, 7}, {0, 8}, {8, 2}, {0, 9}, {9, 2}, {7, 10}, {10, 2}, {7, 11}, {11, 2}})
    edges.push_back(e);
  return Graph::with_vertex_count(12, edges);
}

}  // namespace

const std::vector<Fixture>& fixture_catalogue() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    out.push_back({"claw", star(3), true, true, 3, 3, 4});
    out.push_back({"star4", star(4), true, true, 4, 4, 5});
    out.push_back({"k23", complete_bipartite(2, 3), true, true, 3, 3, 4});
    out.push_back({"k24", complete_bipartite(2, 4), true, true, 4, 4, 5});
    out.push_back({"c5", cycle_graph(5), true, true, 2, 3, 4});
    out.push_back({"c6", cycle_graph(6), true, true, 2, 2, 3});
    out.push_back({"c7", cycle_graph(7), true, true, 2, 3, 4});
    out.push_back({"k4", complete(4), false, false, 3, 3, 5});
    out.push_back({"petersen", petersen(), false, false, 3, 4, -1});
    out.push_back({"theta", theta223(), true, true, 3, 3, 4});
    out.push_back({"theta_pair", theta_pair(), true, false, 4, 4, 5});
    out.push_back({"subdivided_k4", subdivided_k4(), true, true, 3, 3, 4});
    out.push_back({"theta_chain", theta_chain(), true, false, 3, 3, 4});
    out.push_back({"theta_pair_chain", theta_pair_chain(), true, false, 8, 8, 9});
    return out;
  }();
  return fixtures;
}

}  // namespace chordless
