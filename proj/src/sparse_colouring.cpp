#include "chordless/sparse_colouring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "block_merge.hpp"
#include "chordless/recognition.hpp"

namespace chordless {

namespace {

std::string edge_name(VertexId u, VertexId v) {
  Edge e = make_edge(u, v);
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

}  // namespace

int Colouring::edge_colour(VertexId u, VertexId v) const {
  auto it = edge_colours.find(make_edge(u, v));
  if (it == edge_colours.end())
    throw std::invalid_argument("uncoloured edge " + edge_name(u, v));
  return it->second;
}

int Colouring::vertex_colour(VertexId v) const {
  auto it = vertex_colours.find(v);
  if (it == vertex_colours.end())
    throw std::invalid_argument("uncoloured vertex " + std::to_string(v));
  return it->second;
}

int Colouring::max_colour_used() const {
  int best = 0;
  for (const auto& [e, c] : edge_colours) best = std::max(best, c);
  for (const auto& [v, c] : vertex_colours) best = std::max(best, c);
  return best;
}

int Colouring::colours_used() const {
  std::set<int> seen;
  for (const auto& [e, c] : edge_colours) seen.insert(c);
  for (const auto& [v, c] : vertex_colours) seen.insert(c);
  return static_cast<int>(seen.size());
}

void Colouring::merge_from(const Colouring& other) {
  for (const auto& [e, c] : other.edge_colours) {
    auto [it, fresh] = edge_colours.emplace(e, c);
    if (!fresh && it->second != c)
      throw std::logic_error("colouring merge conflict on edge " +
                             edge_name(e.first, e.second));
  }
  for (const auto& [v, c] : other.vertex_colours) {
    auto [it, fresh] = vertex_colours.emplace(v, c);
    if (!fresh && it->second != c)
      throw std::logic_error("colouring merge conflict on vertex " + std::to_string(v));
  }
  palette_size = std::max(palette_size, other.palette_size);
}

const std::vector<int>& ColourLists::at(VertexId u, VertexId v) const {
  auto it = lists.find(make_edge(u, v));
  if (it == lists.end())
    throw std::invalid_argument("no colour list for edge " + edge_name(u, v));
  return it->second;
}

void ColourLists::set(VertexId u, VertexId v, std::vector<int> colours) {
  std::sort(colours.begin(), colours.end());
  colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  lists[make_edge(u, v)] = std::move(colours);
}

ColourLists ColourLists::uniform(const Graph& g, std::vector<int> colours) {
  std::sort(colours.begin(), colours.end());
  ColourLists out;
  for (const Edge& e : g.edges()) out.lists[e] = colours;
  return out;
}

Colouring apply_palette_permutation(Colouring c, std::span<const int> perm) {
  for (auto& [e, col] : c.edge_colours) col = perm[col];
  for (auto& [v, col] : c.vertex_colours) col = perm[col];
  return c;
}

std::vector<int> boundary_palette(const Graph& g, const Colouring& c, VertexId v) {
  std::set<int> used;
  if (c.has_vertex_colour(v)) used.insert(c.vertex_colour(v));
  for (VertexId w : g.neighbors(v))
    if (c.has_edge_colour(v, w)) used.insert(c.edge_colour(v, w));
  return {used.begin(), used.end()};
}

// ---------------------------------------------------------------------------
// Koenig: max_degree-edge-colouring of a bipartite graph, alternating-path
// style. O(nm).
// ---------------------------------------------------------------------------

Colouring konig_edge_colour(const Graph& g) {
  if (!g.is_bipartite())
    throw std::invalid_argument("konig_edge_colour: graph is not bipartite");
  Colouring out;
  if (g.edge_count() == 0) return out;

  const int n = g.vertex_count();
  const int delta = g.max_degree();
  out.palette_size = delta;

  // table[v][c] = neighbour index joined by a c-coloured edge, or -1
  std::vector<std::vector<int>> table(n, std::vector<int>(delta + 1, -1));
  auto min_free = [&](int v) {
    for (int c = 1; c <= delta; ++c)
      if (table[v][c] == -1) return c;
    throw std::logic_error("konig: no free colour");
  };

  for (const Edge& e : g.edges()) {
    int u = g.index_of(e.first), v = g.index_of(e.second);
    int a = min_free(u), b = min_free(v);
    if (a != b) {
      // free colour a at v: flip the maximal a/b-alternating chain from v
      std::vector<std::pair<int, int>> chain;
      int w = v, c = a;
      while (table[w][c] != -1) {
        int x = table[w][c];
        chain.emplace_back(w, x);
        w = x;
        c = (c == a) ? b : a;
      }
      c = a;
      for (auto [s, t] : chain) {
        table[s][c] = -1;
        table[t][c] = -1;
        c = (c == a) ? b : a;
      }
      c = a;
      for (auto [s, t] : chain) {
        int nc = (c == a) ? b : a;
        table[s][nc] = t;
        table[t][nc] = s;
        out.set_edge_colour(g.id_of(s), g.id_of(t), nc);
        c = nc;
      }
      if (table[u][a] != -1 || table[v][a] != -1)
        throw std::logic_error("konig: alternating chain failed");
    }
    table[u][a] = v;
    table[v][a] = u;
    out.set_edge_colour(e.first, e.second, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// list edge colouring of bipartite graphs (uniform lists per X-vertex)
// ---------------------------------------------------------------------------

namespace {

// mutable view of the graph while edges are peeled off
struct PeelState {
  const Graph& g;
  int n, m;
  std::vector<std::vector<int>> inc;  // vertex index -> incident edge indices
  std::vector<char> alive;
  std::vector<int> deg;
  std::vector<std::vector<int>> lists;  // per edge index, sorted

  PeelState(const Graph& graph, const ColourLists& initial)
      : g(graph),
        n(graph.vertex_count()),
        m(graph.edge_count()),
        inc(n),
        alive(m, 1),
        deg(n, 0),
        lists(m) {
    const auto& edges = g.edges();
    for (int i = 0; i < m; ++i) {
      int u = g.index_of(edges[i].first), v = g.index_of(edges[i].second);
      inc[u].push_back(i);
      inc[v].push_back(i);
      ++deg[u];
      ++deg[v];
      lists[i] = initial.at(edges[i].first, edges[i].second);
    }
  }

  std::pair<int, int> ends(int e) const {
    return {g.index_of(g.edges()[e].first), g.index_of(g.edges()[e].second)};
  }
  int other_end(int e, int v) const {
    auto [a, b] = ends(e);
    return a == v ? b : a;
  }
  void kill(int e) {
    alive[e] = 0;
    auto [a, b] = ends(e);
    --deg[a];
    --deg[b];
  }
  // the edge index joining v to its unique alive neighbour other than prev
  int next_edge_from(int v, int avoid_edge) const {
    for (int e : inc[v])
      if (alive[e] && e != avoid_edge) return e;
    return -1;
  }
};

int smallest_in_list_avoiding(const std::vector<int>& list, int avoid1, int avoid2) {
  for (int c : list)
    if (c != avoid1 && c != avoid2) return c;
  return 0;
}

}  // namespace

Colouring list_edge_colour_bipartite(
    const Graph& g,
    const std::pair<std::vector<VertexId>, std::vector<VertexId>>& bipartition,
    const ColourLists& lists) {
  const auto& [xs, ys] = bipartition;
  std::vector<VertexId> x_sorted(xs.begin(), xs.end());
  std::vector<VertexId> y_sorted(ys.begin(), ys.end());
  std::sort(x_sorted.begin(), x_sorted.end());
  std::sort(y_sorted.begin(), y_sorted.end());
  auto in_x = [&](VertexId v) {
    return std::binary_search(x_sorted.begin(), x_sorted.end(), v);
  };

  {  // precondition checks, reported precisely
    std::vector<VertexId> all = x_sorted;
    all.insert(all.end(), y_sorted.begin(), y_sorted.end());
    std::sort(all.begin(), all.end());
    if (all != g.vertex_ids())
      throw std::invalid_argument("list_edge_colour_bipartite: bipartition does not partition V");
    for (const Edge& e : g.edges())
      if (in_x(e.first) == in_x(e.second))
        throw std::invalid_argument("list_edge_colour_bipartite: edge " +
                                    edge_name(e.first, e.second) + " does not cross the bipartition");
    for (VertexId v : y_sorted)
      if (g.degree(v) >= 3)
        throw std::invalid_argument("list_edge_colour_bipartite: degree-3 vertex " +
                                    std::to_string(v) + " outside X");
    for (const Edge& e : g.edges()) {
      const auto& l = lists.at(e.first, e.second);
      if (static_cast<int>(l.size()) <
          std::max(g.degree(e.first), g.degree(e.second)))
        throw std::invalid_argument("list_edge_colour_bipartite: list of edge " +
                                    edge_name(e.first, e.second) + " is too small");
    }
    for (VertexId x : x_sorted) {
      const std::vector<int>* first = nullptr;
      for (VertexId w : g.neighbors(x)) {
        const auto& l = lists.at(x, w);
        if (!first)
          first = &l;
        else if (*first != l)
          throw std::invalid_argument("list_edge_colour_bipartite: lists at vertex " +
                                      std::to_string(x) + " are not uniform");
      }
    }
  }

  Colouring out;
  if (g.edge_count() == 0) return out;
  PeelState st(g, lists);

  std::vector<char> comp_vertex(st.n, 0);
  std::vector<int> comp_edges;

  auto record = [&](int e, int colour) {
    const Edge& ed = g.edges()[e];
    out.set_edge_colour(ed.first, ed.second, colour);
  };

  for (;;) {
    int start = -1;
    for (int e = 0; e < st.m; ++e)
      if (st.alive[e]) {
        start = e;
        break;
      }
    if (start == -1) break;

    // collect the connected component of `start` in the remaining graph
    std::fill(comp_vertex.begin(), comp_vertex.end(), 0);
    comp_edges.clear();
    std::vector<int> stack{st.ends(start).first};
    comp_vertex[stack[0]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : st.inc[v]) {
        if (!st.alive[e]) continue;
        int w = st.other_end(e, v);
        if (!comp_vertex[w]) {
          comp_vertex[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int e = 0; e < st.m; ++e)
      if (st.alive[e] && comp_vertex[st.ends(e).first]) comp_edges.push_back(e);

    bool uniform = true;
    for (int e : comp_edges)
      if (st.lists[e] != st.lists[comp_edges[0]]) {
        uniform = false;
        break;
      }

    if (uniform) {
      // Koenig on the component, mapped through the common list
      const std::vector<int>& common = st.lists[comp_edges[0]];
      std::vector<VertexId> verts;
      std::vector<Edge> edges;
      for (int e : comp_edges) edges.push_back(g.edges()[e]);
      for (const Edge& e : edges) {
        verts.push_back(e.first);
        verts.push_back(e.second);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      Graph comp(verts, edges);
      Colouring kc = konig_edge_colour(comp);
      if (kc.palette_size > static_cast<int>(common.size()))
        throw std::logic_error("list_edge_colour_bipartite: common list too small");
      for (const auto& [e, c] : kc.edge_colours)
        out.edge_colours[e] = common[c - 1];
      for (int e : comp_edges) st.kill(e);
      continue;
    }

    // first adjacent pair with different lists, scanning edges in id order
    int e1 = -1, e2 = -1;
    for (int cand : comp_edges) {
      auto [u, v] = st.ends(cand);
      for (int w : {u, v}) {
        for (int other : st.inc[w]) {
          if (!st.alive[other] || other == cand) continue;
          if (st.lists[other] != st.lists[cand]) {
            e1 = cand;
            e2 = other;
            break;
          }
        }
        if (e1 != -1) break;
      }
      if (e1 != -1) break;
    }
    if (e1 == -1)
      throw std::logic_error("list_edge_colour_bipartite: no differing adjacent pair");

    // orient so that some colour is available for xy and not for x'y
    int xy = e1, xpy = e2;
    {
      std::vector<int> diff;
      std::set_difference(st.lists[e1].begin(), st.lists[e1].end(),
                          st.lists[e2].begin(), st.lists[e2].end(),
                          std::back_inserter(diff));
      if (diff.empty()) std::swap(xy, xpy);
    }
    std::vector<int> diff;
    std::set_difference(st.lists[xy].begin(), st.lists[xy].end(),
                        st.lists[xpy].begin(), st.lists[xpy].end(),
                        std::back_inserter(diff));
    const int colour_one = diff.front();

    // shared endpoint y (degree 2), walk the maximal degree-2 path from x
    auto [p1, q1] = st.ends(xy);
    auto [p2, q2] = st.ends(xpy);
    int y = (p1 == p2 || p1 == q2) ? p1 : q1;
    int x = st.other_end(xy, y);

    std::vector<int> path_edges{xy};
    record(xy, colour_one);
    int prev_colour = colour_one;
    int prev_vertex = y, cur = x;
    bool wrapped = false;
    while (st.deg[cur] == 2) {
      int e = st.next_edge_from(cur, path_edges.back());
      int nxt = st.other_end(e, cur);
      int avoid2 = (nxt == y) ? colour_one : 0;  // cycle closes: also avoid the first edge
      int c = smallest_in_list_avoiding(st.lists[e], prev_colour, avoid2);
      if (c == 0)
        throw std::logic_error("list_edge_colour_bipartite: greedy path step failed");
      record(e, c);
      prev_colour = c;
      path_edges.push_back(e);
      prev_vertex = cur;
      cur = nxt;
      if (cur == y) {
        wrapped = true;
        break;
      }
    }
    (void)prev_vertex;

    int vk = cur;
    int vk_degree_before = st.deg[vk];
    for (int e : path_edges) st.kill(e);
    if (!wrapped && vk_degree_before >= 3) {
      // remove the colour of the last path edge from the remaining lists at vk
      for (int e : st.inc[vk]) {
        if (!st.alive[e]) continue;
        auto& l = st.lists[e];
        l.erase(std::remove(l.begin(), l.end(), prev_colour), l.end());
      }
    }
  }

  out.palette_size = out.max_colour_used();
  return out;
}

// ---------------------------------------------------------------------------
// list edge colouring of 2-sparse graphs
// ---------------------------------------------------------------------------

Colouring list_edge_colour_2sparse(const Graph& g, std::span<const VertexId> s,
                                   const ColourLists& lists) {
  if (!is_2sparse(g).two_sparse)
    throw std::invalid_argument("list_edge_colour_2sparse: graph is not 2-sparse");
  std::vector<VertexId> sv(s.begin(), s.end());
  std::sort(sv.begin(), sv.end());
  auto in_s = [&](VertexId v) { return std::binary_search(sv.begin(), sv.end(), v); };
  for (VertexId v : g.vertex_ids())
    if (g.degree(v) >= 3 && !in_s(v))
      throw std::invalid_argument("list_edge_colour_2sparse: degree-3 vertex " +
                                  std::to_string(v) + " outside s");
  for (const Edge& e : g.edges()) {
    const auto& l = lists.at(e.first, e.second);
    if (static_cast<int>(l.size()) < std::max(g.degree(e.first), g.degree(e.second)))
      throw std::invalid_argument("list_edge_colour_2sparse: list of edge " +
                                  edge_name(e.first, e.second) + " is too small");
    if (!in_s(e.first) && !in_s(e.second) && l.size() < 3)
      throw std::invalid_argument("list_edge_colour_2sparse: edge " +
                                  edge_name(e.first, e.second) +
                                  " has no end in s and fewer than 3 colours");
  }

  // one_end_bipartite validates stability of s
  Graph b = one_end_bipartite(g, sv);
  std::vector<VertexId> b_other;
  for (VertexId v : b.vertex_ids())
    if (!in_s(v)) b_other.push_back(v);

  ColourLists b_lists;
  for (const Edge& e : b.edges()) b_lists.lists[e] = lists.at(e.first, e.second);

  Colouring out = list_edge_colour_bipartite(b, {sv, b_other}, b_lists);

  // edges with no end in s: adjacent to at most two edges, lists of size >= 3
  for (const Edge& e : g.edges()) {
    if (in_s(e.first) || in_s(e.second)) continue;
    std::set<int> taken;
    for (VertexId end : {e.first, e.second})
      for (VertexId w : g.neighbors(end))
        if (out.has_edge_colour(end, w)) taken.insert(out.edge_colour(end, w));
    int chosen = 0;
    for (int c : lists.at(e.first, e.second))
      if (!taken.count(c)) {
        chosen = c;
        break;
      }
    if (chosen == 0) throw std::logic_error("list_edge_colour_2sparse: greedy tail failed");
    out.set_edge_colour(e.first, e.second, chosen);
  }
  out.palette_size = out.max_colour_used();
  return out;
}

Colouring edge_colour_2sparse(const Graph& g) {
  auto check = is_2sparse(g);
  if (!check.two_sparse)
    throw std::invalid_argument("edge_colour_2sparse: graph is not 2-sparse");
  const int delta = g.empty() ? 0 : (g.edge_count() ? g.max_degree() : 0);
  if (delta < 3)
    throw std::invalid_argument("edge_colour_2sparse: max degree below 3");
  std::vector<int> palette(delta);
  for (int c = 0; c < delta; ++c) palette[c] = c + 1;
  std::vector<VertexId> s = stable_high_degree_set(g);
  Colouring out = list_edge_colour_2sparse(g, s, ColourLists::uniform(g, palette));
  out.palette_size = delta;
  return out;
}

// ---------------------------------------------------------------------------
// total colouring of 2-sparse graphs
// ---------------------------------------------------------------------------

Colouring total_colour_2sparse_delta4(const Graph& g, std::span<const VertexId> s,
                                      const std::map<VertexId, int>& vertex_precolours,
                                      const ColourLists& lists, int palette) {
  if (!is_2sparse(g).two_sparse)
    throw std::invalid_argument("total_colour_2sparse_delta4: graph is not 2-sparse");
  const int delta = g.empty() ? 0 : (g.edge_count() ? g.max_degree() : 0);
  if (palette == 0) {
    if (delta < 4)
      throw std::invalid_argument("total_colour_2sparse_delta4: max degree below 4");
    palette = delta + 1;
  }
  if (palette < std::max(5, delta + 1))
    throw std::invalid_argument("total_colour_2sparse_delta4: palette too small");

  std::vector<VertexId> sv(s.begin(), s.end());
  std::sort(sv.begin(), sv.end());
  auto in_s = [&](VertexId v) { return std::binary_search(sv.begin(), sv.end(), v); };
  for (VertexId v : g.vertex_ids())
    if (g.degree(v) >= 3 && !in_s(v))
      throw std::invalid_argument("total_colour_2sparse_delta4: degree-3 vertex " +
                                  std::to_string(v) + " outside s");
  for (VertexId v : sv) {
    auto it = vertex_precolours.find(v);
    if (it == vertex_precolours.end())
      throw std::invalid_argument("total_colour_2sparse_delta4: s-vertex " +
                                  std::to_string(v) + " is not precoloured");
    if (it->second < 1 || it->second > palette)
      throw std::invalid_argument("total_colour_2sparse_delta4: precolour out of palette");
  }
  for (const Edge& e : g.edges()) {
    bool fs = in_s(e.first), ss = in_s(e.second);
    if (!fs && !ss) continue;
    const auto& l = lists.at(e.first, e.second);
    if (static_cast<int>(l.size()) < std::max(g.degree(e.first), g.degree(e.second)))
      throw std::invalid_argument("total_colour_2sparse_delta4: list of edge " +
                                  edge_name(e.first, e.second) + " is too small");
    VertexId send = fs ? e.first : e.second;
    if (std::binary_search(l.begin(), l.end(), vertex_precolours.at(send)))
      throw std::invalid_argument("total_colour_2sparse_delta4: list of edge " +
                                  edge_name(e.first, e.second) +
                                  " contains the precolour of vertex " + std::to_string(send));
    if (l.back() > palette)
      throw std::invalid_argument("total_colour_2sparse_delta4: list colour out of palette");
  }

  Graph b = one_end_bipartite(g, sv);  // also validates stability
  std::vector<VertexId> b_other;
  for (VertexId v : b.vertex_ids())
    if (!in_s(v)) b_other.push_back(v);
  ColourLists b_lists;
  for (const Edge& e : b.edges()) b_lists.lists[e] = lists.at(e.first, e.second);

  Colouring out = list_edge_colour_bipartite(b, {sv, b_other}, b_lists);
  for (VertexId v : sv) out.vertex_colours[v] = vertex_precolours.at(v);

  // remaining elements touch at most four others; palette >= 5
  auto greedy_free = [&](const std::set<int>& taken) {
    for (int c = 1; c <= palette; ++c)
      if (!taken.count(c)) return c;
    throw std::logic_error("total_colour_2sparse_delta4: greedy tail failed");
  };
  for (const Edge& e : g.edges()) {
    if (in_s(e.first) || in_s(e.second)) continue;
    std::set<int> taken;
    for (VertexId end : {e.first, e.second}) {
      if (out.has_vertex_colour(end)) taken.insert(out.vertex_colour(end));
      for (VertexId w : g.neighbors(end))
        if (out.has_edge_colour(end, w)) taken.insert(out.edge_colour(end, w));
    }
    out.set_edge_colour(e.first, e.second, greedy_free(taken));
  }
  for (VertexId v : g.vertex_ids()) {
    if (in_s(v)) continue;
    std::set<int> taken;
    for (VertexId w : g.neighbors(v)) {
      taken.insert(out.edge_colour(v, w));
      if (out.has_vertex_colour(w)) taken.insert(out.vertex_colour(w));
    }
    out.vertex_colours[v] = greedy_free(taken);
  }
  out.palette_size = palette;
  return out;
}

// ---------------------------------------------------------------------------
// path extension with four colours
// ---------------------------------------------------------------------------

namespace {

// colours the open interior of path[lo..hi]; the four frame elements
// (vertex lo, edge lo, edge hi-1, vertex hi) are already set
void extend_path_frame(std::span<const VertexId> path, Colouring& col, int lo, int hi) {
  auto vcol = [&](int i) { return col.vertex_colour(path[i]); };
  auto ecol = [&](int i) { return col.edge_colour(path[i], path[i + 1]); };
  auto set_v = [&](int i, int c) { col.vertex_colours[path[i]] = c; };
  auto set_e = [&](int i, int c) { col.set_edge_colour(path[i], path[i + 1], c); };

  const int k = hi - lo + 1;
  // normalise to the canonical frames 1,2,2,1 / 1,2,3,1
  std::array<int, 5> sigma{};  // colour -> canonical
  std::array<int, 5> tau{};    // canonical -> colour
  std::array<char, 5> used{};
  auto assign = [&](int from, int to) {
    sigma[from] = to;
    tau[to] = from;
    used[from] = 1;
  };
  assign(vcol(lo), 1);
  assign(ecol(lo), 2);
  if (sigma[ecol(hi - 1)] == 0) assign(ecol(hi - 1), 3);
  int next = sigma[ecol(hi - 1)] == 2 ? 3 : 4;
  for (int c = 1; c <= 4; ++c)
    if (!used[c]) {
      assign(c, next);
      ++next;
    }

  if (k == 3) {
    set_v(lo + 1, tau[4]);
  } else if (k == 4) {
    set_v(lo + 1, tau[3]);
    set_e(lo + 1, tau[1]);
    set_v(lo + 2, tau[4]);
  } else {
    set_v(lo + 1, tau[4]);
    set_e(lo + 1, tau[3]);
    set_e(hi - 2, tau[1]);
    set_v(hi - 1, tau[4]);
    extend_path_frame(path, col, lo + 1, hi - 1);
  }
}

}  // namespace

Colouring extend_path_total(std::span<const VertexId> path, int colour_first_vertex,
                            int colour_first_edge, int colour_last_edge,
                            int colour_last_vertex) {
  const int k = static_cast<int>(path.size());
  if (k < 3) throw std::invalid_argument("extend_path_total: path needs k >= 3");
  {
    std::vector<VertexId> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("extend_path_total: repeated path vertex");
  }
  for (int c : {colour_first_vertex, colour_first_edge, colour_last_edge, colour_last_vertex})
    if (c < 1 || c > 4)
      throw std::invalid_argument("extend_path_total: precolour outside 1..4");
  if (colour_first_vertex != colour_last_vertex)
    throw std::invalid_argument("extend_path_total: end vertices must share a colour");
  if (colour_first_edge == colour_first_vertex || colour_last_edge == colour_last_vertex)
    throw std::invalid_argument("extend_path_total: precoloured edge clashes with its end");
  if (k == 3 && colour_first_edge == colour_last_edge)
    throw std::invalid_argument("extend_path_total: adjacent precoloured edges clash");

  Colouring col;
  col.palette_size = 4;
  col.vertex_colours[path[0]] = colour_first_vertex;
  col.vertex_colours[path[k - 1]] = colour_last_vertex;
  col.set_edge_colour(path[0], path[1], colour_first_edge);
  col.set_edge_colour(path[k - 2], path[k - 1], colour_last_edge);
  extend_path_frame(path, col, 0, k - 1);
  return col;
}

// ---------------------------------------------------------------------------
// 4-total-colouring of 2-connected 2-sparse cubic graphs
// ---------------------------------------------------------------------------

Colouring total_colour_2sparse_cubic(const Graph& g,
                                     const std::optional<CubicAnchor>& anchor) {
  if (!g.is_biconnected())
    throw std::invalid_argument("total_colour_2sparse_cubic: graph is not 2-connected");
  if (!is_2sparse(g).two_sparse)
    throw std::invalid_argument("total_colour_2sparse_cubic: graph is not 2-sparse");
  if (g.max_degree() != 3)
    throw std::invalid_argument("total_colour_2sparse_cubic: max degree is not 3");

  if (anchor) {
    const CubicAnchor& an = *anchor;
    if (an.a == an.b) throw std::invalid_argument("cubic anchor: a equals b");
    if (!g.has_vertex(an.u) || !g.has_vertex(an.a) || !g.has_vertex(an.b))
      throw std::invalid_argument("cubic anchor: unknown vertex");
    if (g.degree(an.u) != 2 || !g.has_edge(an.u, an.a) || !g.has_edge(an.u, an.b))
      throw std::invalid_argument("cubic anchor: u must have degree 2 with neighbours a, b");
    if (g.degree(an.a) != 3 || g.degree(an.b) != 3)
      throw std::invalid_argument("cubic anchor: a and b must have degree 3");
    for (int c : {an.colour_a, an.colour_b, an.colour_au, an.colour_ub})
      if (c < 1 || c > 4) throw std::invalid_argument("cubic anchor: colour outside 1..4");
    if (an.colour_a != an.colour_b)
      throw std::invalid_argument("cubic anchor: a and b must share a colour");
    if (an.colour_au == an.colour_a || an.colour_ub == an.colour_b ||
        an.colour_au == an.colour_ub)
      throw std::invalid_argument("cubic anchor: inconsistent colours");
  }

  std::vector<VertexId> s = stable_high_degree_set(g);
  Graph b = one_end_bipartite(g, s);  // validates stability

  Colouring kcol = konig_edge_colour(b);
  if (kcol.palette_size > 3)
    throw std::logic_error("total_colour_2sparse_cubic: Koenig palette exceeded 3");

  Colouring col;
  col.palette_size = 4;
  for (const auto& [e, c] : kcol.edge_colours) col.edge_colours[e] = c + 1;  // into 2..4
  for (VertexId v : s) col.vertex_colours[v] = 1;

  if (anchor) {
    // relabel within {2,3,4} so au gets 2 and ub gets 3
    int cau = col.edge_colour(anchor->a, anchor->u);
    int cub = col.edge_colour(anchor->u, anchor->b);
    std::array<int, 5> perm{0, 1, 0, 0, 0};
    perm[cau] = 2;
    perm[cub] = 3;
    for (int c = 2; c <= 4; ++c)
      if (perm[c] == 0) perm[c] = 4;  // the remaining target of {2,3,4}
    col = apply_palette_permutation(std::move(col), perm);
  }

  // maximal paths whose interiors have degree 2 edge-wise partition the graph
  std::set<Edge> consumed;
  std::vector<std::vector<VertexId>> paths;
  for (VertexId start : s) {
    for (VertexId first : g.neighbors(start)) {
      if (consumed.count(make_edge(start, first))) continue;
      std::vector<VertexId> path{start, first};
      consumed.insert(make_edge(start, first));
      VertexId prev = start, cur = first;
      while (g.degree(cur) == 2) {
        auto nbrs = g.neighbors(cur);
        VertexId nxt = (nbrs[0] != prev) ? nbrs[0] : nbrs[1];
        consumed.insert(make_edge(cur, nxt));
        path.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      paths.push_back(std::move(path));
    }
  }
  if (static_cast<int>(consumed.size()) != g.edge_count())
    throw std::logic_error("total_colour_2sparse_cubic: paths do not partition the edges");
  {
    std::set<VertexId> covered;
    for (const auto& p : paths) covered.insert(p.begin(), p.end());
    if (static_cast<int>(covered.size()) != g.vertex_count())
      throw std::logic_error("total_colour_2sparse_cubic: paths do not cover the vertices");
  }

  for (const auto& path : paths) {
    const int k = static_cast<int>(path.size());
    Colouring ext = extend_path_total(
        path, col.vertex_colour(path[0]), col.edge_colour(path[0], path[1]),
        col.edge_colour(path[k - 2], path[k - 1]), col.vertex_colour(path[k - 1]));
    col.merge_from(ext);
  }

  if (anchor && (anchor->colour_a != 1 || anchor->colour_au != 2 || anchor->colour_ub != 3)) {
    std::array<int, 5> perm{};
    perm[1] = anchor->colour_a;
    perm[2] = anchor->colour_au;
    perm[3] = anchor->colour_ub;
    perm[4] = 10 - anchor->colour_a - anchor->colour_au - anchor->colour_ub;
    col = apply_palette_permutation(std::move(col), perm);
  }
  col.palette_size = 4;
  return col;
}

Colouring total_colour_2sparse(const Graph& g) {
  if (!is_2sparse(g).two_sparse)
    throw std::invalid_argument("total_colour_2sparse: graph is not 2-sparse");
  if (g.empty()) return {};
  const int delta = g.max_degree();

  if (delta >= 4) {
    std::vector<VertexId> s = stable_high_degree_set(g);
    std::map<VertexId, int> pre;
    for (VertexId v : s) pre[v] = 1;
    std::vector<int> tail;
    for (int c = 2; c <= delta + 1; ++c) tail.push_back(c);
    ColourLists lists;
    auto in_s = [&](VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
    for (const Edge& e : g.edges())
      if (in_s(e.first) || in_s(e.second)) lists.lists[e] = tail;
    return total_colour_2sparse_delta4(g, s, pre, lists, delta + 1);
  }

  // stronger statement: any 2-sparse graph with max degree <= 3 gets 4 colours
  Colouring out = detail::merge_block_colourings(
      g, /*total=*/true, /*palette=*/4, [](const Graph& block) {
        if (block.vertex_count() == 2) return detail::k2_total_colouring(block);
        if (block.max_degree() == 2) return detail::cycle_total_colouring(block);
        return total_colour_2sparse_cubic(block, std::nullopt);
      });
  out.palette_size = 4;
  return out;
}

}  // namespace chordless
