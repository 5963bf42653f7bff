#include "chordless/chordless_colouring.hpp"

#include <algorithm>
#include <array>

#include "block_merge.hpp"

namespace chordless {

namespace {

Colouring colour_any_chordless(const Graph& g, ColourMode mode, ColourTrace* trace);

struct DepthGuard {
  ColourTrace* trace;
  explicit DepthGuard(ColourTrace* t) : trace(t) {
    if (!trace) return;
    ++trace->recursive_calls;
    ++trace->depth;
    trace->max_depth = std::max(trace->max_depth, trace->depth);
  }
  ~DepthGuard() {
    if (trace) --trace->depth;
  }
};

// split bookkeeping shared by the three recursive cases
struct SplitContext {
  Split split;
  SplitBlock x_block;
  SplitBlock y_block;
  std::vector<VertexId> s;  // degree->=3 vertices of the X block
  TraceStep step;
};

SplitContext prepare_split(const Graph& g, const char* case_name, ColourTrace* trace) {
  SplitContext ctx;
  auto found = find_extremal_split(g);
  if (!found)
    throw std::logic_error("colour_recursive: 2-connected non-2-sparse chordless graph "
                           "without a proper 2-cutset");
  ctx.split = std::move(*found);
  auto [bx, by] = build_blocks(g, ctx.split);
  ctx.x_block = std::move(bx);
  ctx.y_block = std::move(by);
  ctx.s = stable_high_degree_set(ctx.x_block.graph);

  ctx.step.split = ctx.split;
  ctx.step.case_name = case_name;
  ctx.step.x_block_two_sparse = is_2sparse(ctx.x_block.graph).two_sparse;
  ctx.step.marker_x = ctx.x_block.marker;
  ctx.step.graph_vertices = g.vertex_count();
  for (VertexId w : g.neighbors(ctx.split.a))
    if (std::binary_search(ctx.split.x.begin(), ctx.split.x.end(), w))
      ++ctx.step.a_neighbours_in_x;
  for (VertexId w : g.neighbors(ctx.split.b))
    if (std::binary_search(ctx.split.x.begin(), ctx.split.x.end(), w))
      ++ctx.step.b_neighbours_in_x;
  if (trace) ctx.step.depth = trace->depth;

  if (!ctx.step.x_block_two_sparse)
    throw std::logic_error("colour_recursive: extremal X block is not 2-sparse");
  return ctx;
}

void push_step(ColourTrace* trace, TraceStep step) {
  if (trace) trace->steps.push_back(std::move(step));
}

std::vector<VertexId> side_with_cut(const std::vector<VertexId>& side, VertexId a,
                                    VertexId b) {
  std::vector<VertexId> verts = side;
  verts.push_back(a);
  verts.push_back(b);
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::vector<int> full_palette(int k) {
  std::vector<int> out(k);
  for (int c = 0; c < k; ++c) out[c] = c + 1;
  return out;
}

std::vector<int> palette_minus(int k, const std::vector<int>& banned) {
  std::vector<int> out;
  for (int c = 1; c <= k; ++c)
    if (!std::binary_search(banned.begin(), banned.end(), c)) out.push_back(c);
  return out;
}

}  // namespace

Colouring colour_recursive_edge(const Graph& g, ColourTrace* trace) {
  DepthGuard guard(trace);
  const int delta = g.max_degree();
  SplitContext ctx = prepare_split(g, "edge", trace);
  push_step(trace, ctx.step);

  // recurse on G[Y u {a,b}] (no marker vertex on this side)
  Graph h = g.induced_subgraph(side_with_cut(ctx.split.y, ctx.split.a, ctx.split.b));
  Colouring sub = colour_any_chordless(h, ColourMode::edge, trace);
  if (sub.max_colour_used() > delta)
    throw std::logic_error("colour_recursive_edge: sub-colouring exceeded the palette");

  const std::vector<int> c_a = boundary_palette(h, sub, ctx.split.a);
  const std::vector<int> c_b = boundary_palette(h, sub, ctx.split.b);

  Graph xside = g.induced_subgraph(side_with_cut(ctx.split.x, ctx.split.a, ctx.split.b));
  ColourLists lists;
  for (const Edge& e : xside.edges()) {
    if (e.first == ctx.split.a || e.second == ctx.split.a)
      lists.lists[e] = palette_minus(delta, c_a);
    else if (e.first == ctx.split.b || e.second == ctx.split.b)
      lists.lists[e] = palette_minus(delta, c_b);
    else
      lists.lists[e] = full_palette(delta);
  }

  Colouring xcol = list_edge_colour_2sparse(xside, ctx.s, lists);
  sub.merge_from(xcol);
  sub.palette_size = delta;
  return sub;
}

Colouring colour_recursive_total_delta4(const Graph& g, ColourTrace* trace) {
  DepthGuard guard(trace);
  const int delta = g.max_degree();
  SplitContext ctx = prepare_split(g, "total-delta4", trace);
  push_step(trace, ctx.step);

  Graph h = g.induced_subgraph(side_with_cut(ctx.split.y, ctx.split.a, ctx.split.b));
  Colouring sub = colour_any_chordless(h, ColourMode::total, trace);
  if (sub.max_colour_used() > delta + 1)
    throw std::logic_error("colour_recursive_total_delta4: sub-colouring exceeded the palette");

  const std::vector<int> c_a = boundary_palette(h, sub, ctx.split.a);
  const std::vector<int> c_b = boundary_palette(h, sub, ctx.split.b);

  Graph xside = g.induced_subgraph(side_with_cut(ctx.split.x, ctx.split.a, ctx.split.b));
  std::map<VertexId, int> pre;
  pre[ctx.split.a] = sub.vertex_colour(ctx.split.a);
  pre[ctx.split.b] = sub.vertex_colour(ctx.split.b);
  for (VertexId v : ctx.s)
    if (v != ctx.split.a && v != ctx.split.b) pre[v] = 1;

  auto in_s = [&](VertexId v) {
    return std::binary_search(ctx.s.begin(), ctx.s.end(), v);
  };
  ColourLists lists;
  std::vector<int> other_list;
  for (int c = 2; c <= delta + 1; ++c) other_list.push_back(c);
  for (const Edge& e : xside.edges()) {
    if (e.first == ctx.split.a || e.second == ctx.split.a)
      lists.lists[e] = palette_minus(delta + 1, c_a);
    else if (e.first == ctx.split.b || e.second == ctx.split.b)
      lists.lists[e] = palette_minus(delta + 1, c_b);
    else if (in_s(e.first) || in_s(e.second))
      lists.lists[e] = other_list;
  }

  Colouring xcol = total_colour_2sparse_delta4(xside, ctx.s, pre, lists, delta + 1);
  // a and b carry the same colours in both parts; merge checks the overlap
  sub.merge_from(xcol);
  sub.palette_size = delta + 1;
  return sub;
}

Colouring colour_recursive_total_delta3(const Graph& g, ColourTrace* trace) {
  DepthGuard guard(trace);
  SplitContext ctx = prepare_split(g, "total-delta3", trace);
  const VertexId a = ctx.split.a, b = ctx.split.b;

  // unique Y-side neighbours of a and b
  auto y_neighbour = [&](VertexId v) {
    VertexId found = -1;
    int count = 0;
    for (VertexId w : g.neighbors(v))
      if (std::binary_search(ctx.split.y.begin(), ctx.split.y.end(), w)) {
        found = w;
        ++count;
      }
    if (count != 1)
      throw std::logic_error("colour_recursive_total_delta3: cut vertex without a "
                             "unique Y-side neighbour");
    return found;
  };
  const VertexId a_ext = y_neighbour(a);
  const VertexId b_ext = y_neighbour(b);
  if (a_ext == b_ext)
    throw std::logic_error("colour_recursive_total_delta3: external neighbours collide");

  const VertexId w_ab = g.vertex_ids().back() + 2;  // X marker took max+1
  ContractionRecord rec{w_ab, {a, b}, {a_ext, b_ext}};
  ctx.step.contraction = rec;
  push_step(trace, ctx.step);

  // contracted Y block: Y plus w_ab adjacent to a' and b'
  Graph y_inner = g.induced_subgraph(ctx.split.y);
  std::vector<VertexId> verts = y_inner.vertex_ids();
  verts.push_back(w_ab);
  std::vector<Edge> edges = y_inner.edges();
  edges.push_back(make_edge(w_ab, a_ext));
  edges.push_back(make_edge(w_ab, b_ext));
  Graph contracted(verts, edges);
  if (contracted.max_degree() > 3)
    throw std::logic_error("colour_recursive_total_delta3: contracted block degree grew");

  Colouring sub = colour_any_chordless(contracted, ColourMode::total, trace);
  if (sub.max_colour_used() > 4)
    throw std::logic_error("colour_recursive_total_delta3: sub-colouring exceeded 4 colours");

  // normalise: w_ab -> 1, w_ab a' -> 2, w_ab b' -> 3
  {
    std::array<int, 5> perm{};
    std::array<char, 5> used{};
    perm[sub.vertex_colour(w_ab)] = 1;
    used[1] = 1;
    perm[sub.edge_colour(w_ab, a_ext)] = 2;
    used[2] = 1;
    perm[sub.edge_colour(w_ab, b_ext)] = 3;
    used[3] = 1;
    for (int c = 1; c <= 4; ++c)
      if (perm[c] == 0)
        for (int t = 1; t <= 4; ++t)
          if (!used[t]) {
            perm[c] = t;
            used[t] = 1;
            break;
          }
    sub = apply_palette_permutation(std::move(sub), perm);
  }

  // anchor the X block at its marker and extend by the cubic lemma
  CubicAnchor anchor{ctx.x_block.marker, a, b, 1, 1, 2, 3};
  Colouring xcol = total_colour_2sparse_cubic(ctx.x_block.graph, anchor);

  Colouring out;
  out.palette_size = 4;
  const VertexId marker = ctx.x_block.marker;
  for (const auto& [v, c] : xcol.vertex_colours)
    if (v != marker) out.vertex_colours[v] = c;
  for (const auto& [e, c] : xcol.edge_colours)
    if (e.first != marker && e.second != marker) out.edge_colours[e] = c;
  out.set_edge_colour(a, a_ext, xcol.edge_colour(marker, a));  // colour 2
  out.set_edge_colour(b, b_ext, xcol.edge_colour(marker, b));  // colour 3
  for (const auto& [v, c] : sub.vertex_colours)
    if (v != w_ab) out.vertex_colours[v] = c;
  for (const auto& [e, c] : sub.edge_colours)
    if (e.first != w_ab && e.second != w_ab) out.edge_colours[e] = c;
  return out;
}

namespace {

Colouring colour_block(const Graph& block, ColourMode mode, ColourTrace* trace) {
  if (block.vertex_count() == 2)
    return mode == ColourMode::edge ? detail::k2_edge_colouring(block)
                                    : detail::k2_total_colouring(block);
  const int delta = block.max_degree();
  if (delta == 2)
    return mode == ColourMode::edge ? detail::cycle_edge_colouring(block)
                                    : detail::cycle_total_colouring(block);
  const bool sparse = is_2sparse(block).two_sparse;
  if (mode == ColourMode::edge)
    return sparse ? edge_colour_2sparse(block) : colour_recursive_edge(block, trace);
  if (sparse) return total_colour_2sparse(block);
  return delta == 3 ? colour_recursive_total_delta3(block, trace)
                    : colour_recursive_total_delta4(block, trace);
}

Colouring colour_any_chordless(const Graph& g, ColourMode mode, ColourTrace* trace) {
  if (g.empty()) return {};
  const int delta = g.edge_count() ? g.max_degree() : 0;
  int palette;
  if (mode == ColourMode::total) {
    palette = std::max(delta + 1, g.vertex_count() ? 4 : 0);
  } else {
    palette = delta;  // raised below if an odd cycle block needs 3
  }

  const int merge_palette =
      mode == ColourMode::edge ? std::max(palette, 3) : palette;
  Colouring out = detail::merge_block_colourings(
      g, mode == ColourMode::total, merge_palette,
      [&](const Graph& block) { return colour_block(block, mode, trace); });
  out.palette_size = std::max(palette, out.max_colour_used());
  return out;
}

}  // namespace

Colouring merge_articulation_blocks(const Graph& g, ColourMode mode, ColourTrace* trace) {
  return colour_any_chordless(g, mode, trace);
}

Colouring colour_small_delta(const Graph& g, ColourMode mode) {
  if (!g.empty() && g.max_degree() > 2)
    throw std::invalid_argument("colour_small_delta: max degree above 2");
  return colour_any_chordless(g, mode, nullptr);
}

Colouring edge_colour_chordless(const Graph& g, ColourTrace* trace) {
  if (g.empty() || g.edge_count() == 0) throw DeltaTooSmallError(0);
  const int delta = g.max_degree();
  if (delta < 3) throw DeltaTooSmallError(delta);
  auto check = is_chordless(g);
  if (!check.chordless) throw NotChordlessError(std::move(*check.witness));
  Colouring out = colour_any_chordless(g, ColourMode::edge, trace);
  out.palette_size = delta;
  return out;
}

Colouring total_colour_chordless(const Graph& g, ColourTrace* trace) {
  if (g.empty() || g.edge_count() == 0) throw DeltaTooSmallError(0);
  const int delta = g.max_degree();
  if (delta < 3) throw DeltaTooSmallError(delta);
  auto check = is_chordless(g);
  if (!check.chordless) throw NotChordlessError(std::move(*check.witness));
  Colouring out = colour_any_chordless(g, ColourMode::total, trace);
  out.palette_size = delta + 1;
  return out;
}

// ---------------------------------------------------------------------------
// extremal decomposition tree
// ---------------------------------------------------------------------------

namespace {

DecompositionNode decompose_block(const Graph& block) {
  DecompositionNode node;
  node.vertices = block.vertex_count();
  node.edges = block.edge_count();
  if (block.vertex_count() == 2) {
    node.kind = "edge-leaf";
    return node;
  }
  if (block.max_degree() == 2) {
    node.kind = "cycle-leaf";
    return node;
  }
  if (is_2sparse(block).two_sparse) {
    node.kind = "two-sparse-leaf";
    return node;
  }
  auto split = find_extremal_split(block);
  if (!split) throw std::logic_error("decompose: missing split on a non-2-sparse block");
  auto [bx, by] = build_blocks(block, *split);

  node.kind = "split";
  node.a = split->a;
  node.b = split->b;
  node.x_size = static_cast<int>(split->x.size());
  node.y_size = static_cast<int>(split->y.size());
  node.x_block_two_sparse = is_2sparse(bx.graph).two_sparse;
  node.marker_x = bx.marker;
  node.marker_y = by.marker;

  DecompositionNode xleaf;
  xleaf.kind = "two-sparse-leaf";
  xleaf.vertices = bx.graph.vertex_count();
  xleaf.edges = bx.graph.edge_count();
  node.children.push_back(std::move(xleaf));
  node.children.push_back(decompose_block(by.graph));
  return node;
}

}  // namespace

DecompositionNode decompose(const Graph& g) {
  DecompositionNode root;
  root.kind = "graph";
  root.vertices = g.vertex_count();
  root.edges = g.edge_count();

  BiconnectedResult bc = g.biconnected_components();
  for (const auto& block_edges : bc.blocks) {
    std::vector<VertexId> verts;
    for (const Edge& e : block_edges) {
      verts.push_back(e.first);
      verts.push_back(e.second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    root.children.push_back(decompose_block(Graph(verts, block_edges)));
  }
  return root;
}

}  // namespace chordless
