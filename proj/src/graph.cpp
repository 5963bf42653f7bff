#include "chordless/graph.hpp"

#include <algorithm>
#include <numeric>

namespace chordless {

Graph::Graph(std::vector<VertexId> vertex_ids, const std::vector<Edge>& edge_list)
    : ids_(std::move(vertex_ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw std::invalid_argument("graph: duplicate vertex id");

  edges_.reserve(edge_list.size());
  for (const Edge& e : edge_list) {
    if (e.first == e.second)
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.first));
    edges_.push_back(make_edge(e.first, e.second));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: parallel edge");

  adj_.assign(ids_.size(), {});
  adj_idx_.assign(ids_.size(), {});
  for (const Edge& e : edges_) {
    int ui = index_of(e.first);  // throws on unknown endpoint
    int vi = index_of(e.second);
    adj_[ui].push_back(e.second);
    adj_[vi].push_back(e.first);
    adj_idx_[ui].push_back(vi);
    adj_idx_[vi].push_back(ui);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  for (auto& nbrs : adj_idx_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::with_vertex_count(int n, const std::vector<Edge>& edge_list) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Graph(std::move(ids), edge_list);
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nbrs = adj_[index_of(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v)
    throw std::invalid_argument("graph: unknown vertex " + std::to_string(v));
  return static_cast<int>(it - ids_.begin());
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(adj_[index_of(v)].size());
}

int Graph::max_degree() const {
  if (ids_.empty()) throw std::invalid_argument("max_degree: empty graph");
  int best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

std::span<const int> Graph::neighbors_by_index(int index) const {
  return adj_idx_[index];
}

Graph Graph::induced_subgraph(std::span<const VertexId> keep) const {
  std::vector<VertexId> verts(keep.begin(), keep.end());
  std::sort(verts.begin(), verts.end());
  for (VertexId v : verts)
    if (!has_vertex(v))
      throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));
  std::vector<Edge> kept;
  for (VertexId v : verts)
    for (VertexId w : neighbors(v))
      if (v < w && std::binary_search(verts.begin(), verts.end(), w))
        kept.emplace_back(v, w);
  return Graph(std::move(verts), kept);
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
  const int n = vertex_count();
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(ids_[v]);
      for (int w : adj_idx_[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const {
  return connected_components().size() <= 1;
}

// Iterative Hopcroft-Tarjan block/cutvertex decomposition.
BiconnectedResult Graph::biconnected_components() const {
  const int n = vertex_count();
  BiconnectedResult res;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  // frame: (vertex, next neighbour position)
  std::vector<std::pair<int, size_t>> frames;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    frames.emplace_back(root, 0);
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& nbrs = adj_idx_[v];
      if (pos < nbrs.size()) {
        int w = nbrs[pos++];
        if (disc[w] == -1) {
          edge_stack.push_back(make_edge(ids_[v], ids_[w]));
          parent[w] = v;
          ++child_count[v];
          disc[w] = low[w] = timer++;
          frames.emplace_back(w, 0);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.push_back(make_edge(ids_[v], ids_[w]));
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        frames.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            // pop the block whose top edge is (p, v)
            Edge top = make_edge(ids_[p], ids_[v]);
            std::vector<Edge> block;
            while (!edge_stack.empty()) {
              Edge e = edge_stack.back();
              edge_stack.pop_back();
              block.push_back(e);
              if (e == top) break;
            }
            std::sort(block.begin(), block.end());
            res.blocks.push_back(std::move(block));
            if (parent[p] != -1 || child_count[p] > 1) is_cut[p] = 1;
          }
        }
      }
    }
  }
  std::sort(res.blocks.begin(), res.blocks.end());
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) res.cut_vertices.push_back(ids_[v]);
  return res;
}

bool Graph::is_biconnected() const {
  if (vertex_count() < 3 || !is_connected()) return false;
  return biconnected_components().cut_vertices.empty();
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
Graph::is_bipartite() const {
  const int n = vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_idx_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<VertexId>, std::vector<VertexId>> parts;
  for (int v = 0; v < n; ++v)
    (side[v] == 0 ? parts.first : parts.second).push_back(ids_[v]);
  return parts;
}

}  // namespace chordless
