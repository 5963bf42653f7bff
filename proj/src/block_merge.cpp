#include "block_merge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chordless::detail {

namespace {

// vertices of a cycle graph in walk order, starting at the smallest id
std::vector<VertexId> cycle_order(const Graph& g) {
  std::vector<VertexId> order;
  VertexId start = g.vertex_ids().front();
  VertexId prev = -1, cur = start;
  do {
    order.push_back(cur);
    auto nbrs = g.neighbors(cur);
    VertexId next = (nbrs[0] != prev) ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
  } while (cur != start);
  return order;
}

}  // namespace

Colouring k2_edge_colouring(const Graph& g) {
  Colouring c;
  c.set_edge_colour(g.edges()[0].first, g.edges()[0].second, 1);
  c.palette_size = 1;
  return c;
}

Colouring k2_total_colouring(const Graph& g) {
  Colouring c;
  const Edge e = g.edges()[0];
  c.vertex_colours[e.first] = 1;
  c.vertex_colours[e.second] = 2;
  c.set_edge_colour(e.first, e.second, 3);
  c.palette_size = 3;
  return c;
}

Colouring cycle_edge_colouring(const Graph& g) {
  std::vector<VertexId> order = cycle_order(g);
  const int n = static_cast<int>(order.size());
  Colouring c;
  for (int i = 0; i < n; ++i) {
    int colour = (i == n - 1 && n % 2 == 1) ? 3 : (i % 2 == 0 ? 1 : 2);
    c.set_edge_colour(order[i], order[(i + 1) % n], colour);
  }
  c.palette_size = c.max_colour_used();
  return c;
}

// Elements around the cycle form the sequence v0 e01 v1 e12 ... of length 2n;
// any assignment whose cyclic windows of three are pairwise distinct is a
// proper total colouring. Blocks 1,2,3 and 1,2,3,4 compose to any even
// length 2n >= 6.
Colouring cycle_total_colouring(const Graph& g) {
  std::vector<VertexId> order = cycle_order(g);
  const int n = static_cast<int>(order.size());
  const int len = 2 * n;
  int four_blocks = 0;
  if (len % 3 == 1) four_blocks = 1;
  if (len % 3 == 2) four_blocks = 2;
  int three_blocks = (len - 4 * four_blocks) / 3;

  std::vector<int> seq;
  seq.reserve(len);
  for (int i = 0; i < three_blocks; ++i) seq.insert(seq.end(), {1, 2, 3});
  for (int i = 0; i < four_blocks; ++i) seq.insert(seq.end(), {1, 2, 3, 4});

  Colouring c;
  for (int i = 0; i < n; ++i) {
    c.vertex_colours[order[i]] = seq[2 * i];
    c.set_edge_colour(order[i], order[(i + 1) % n], seq[2 * i + 1]);
  }
  c.palette_size = four_blocks > 0 ? 4 : 3;
  return c;
}

Colouring merge_block_colourings(const Graph& g, bool total, int palette,
                                 const std::function<Colouring(const Graph&)>& block_fn) {
  Colouring result;
  result.palette_size = palette;
  if (g.empty()) return result;

  BiconnectedResult bc = g.biconnected_components();
  const int nblocks = static_cast<int>(bc.blocks.size());

  std::vector<std::vector<VertexId>> block_verts(nblocks);
  for (int i = 0; i < nblocks; ++i) {
    std::vector<VertexId>& verts = block_verts[i];
    for (const Edge& e : bc.blocks[i]) {
      verts.push_back(e.first);
      verts.push_back(e.second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  }

  if (total) {
    std::set<VertexId> covered;
    for (const auto& verts : block_verts) covered.insert(verts.begin(), verts.end());
    for (VertexId v : g.vertex_ids())
      if (!covered.count(v)) result.vertex_colours[v] = 1;  // isolated vertex
  }

  std::set<VertexId> processed;
  std::vector<char> done(nblocks, 0);
  for (int remaining = nblocks; remaining > 0; --remaining) {
    int pick = -1;
    bool root = false;
    for (int i = 0; i < nblocks && pick == -1; ++i) {
      if (done[i]) continue;
      for (VertexId v : block_verts[i])
        if (processed.count(v)) {
          pick = i;
          break;
        }
    }
    if (pick == -1) {
      for (int i = 0; i < nblocks; ++i)
        if (!done[i]) {
          pick = i;
          root = true;
          break;
        }
    }
    done[pick] = 1;

    Graph block(block_verts[pick], bc.blocks[pick]);
    Colouring local = block_fn(block);
    if (local.max_colour_used() > palette)
      throw std::logic_error("merge_block_colourings: block exceeded the palette");

    if (!root) {
      VertexId attach = -1;
      for (VertexId v : block_verts[pick])
        if (processed.count(v)) {
          if (attach != -1)
            throw std::logic_error("merge_block_colourings: block-tree order broken");
          attach = v;
        }

      std::vector<int> perm(palette + 1, 0);
      std::vector<char> image_used(palette + 1, 0);
      std::vector<char> forbidden(palette + 1, 0);
      for (VertexId w : g.neighbors(attach))
        if (result.has_edge_colour(attach, w))
          forbidden[result.edge_colour(attach, w)] = 1;
      if (total) forbidden[result.vertex_colour(attach)] = 1;

      if (total) {
        perm[local.vertex_colour(attach)] = result.vertex_colour(attach);
        image_used[result.vertex_colour(attach)] = 1;
      }
      for (VertexId w : block.neighbors(attach)) {
        int lc = local.edge_colour(attach, w);
        if (perm[lc] != 0) continue;  // same local colour cannot repeat at attach
        int target = 0;
        for (int c = 1; c <= palette; ++c)
          if (!forbidden[c] && !image_used[c]) {
            target = c;
            break;
          }
        if (target == 0)
          throw std::logic_error("merge_block_colourings: no free colour at cutvertex");
        perm[lc] = target;
        image_used[target] = 1;
      }
      int next_img = 1;
      for (int c = 1; c <= palette; ++c) {
        if (perm[c] != 0) continue;
        while (image_used[next_img]) ++next_img;
        perm[c] = next_img;
        image_used[next_img] = 1;
      }
      local = apply_palette_permutation(std::move(local), perm);
    }

    for (const auto& [e, col] : local.edge_colours) result.edge_colours[e] = col;
    if (total)
      for (const auto& [v, col] : local.vertex_colours) result.vertex_colours[v] = col;
    processed.insert(block_verts[pick].begin(), block_verts[pick].end());
  }
  return result;
}

}  // namespace chordless::detail
