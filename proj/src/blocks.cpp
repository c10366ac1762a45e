#include "dynplanar/blocks.hpp"

#include <algorithm>
#include <deque>

namespace dynplanar {

int BlockDecomposition::common_block(VertexId a, VertexId b) const {
  const auto& x = vertex_blocks[a];
  const auto& y = vertex_blocks[b];
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return x[i];
    if (x[i] < y[j]) ++i;
    else ++j;
  }
  return -1;
}

std::vector<VertexId> BlockDecomposition::cut_vertices_between(VertexId a, VertexId b) const {
  if (a == b || same_block(a, b)) return {};
  // Block-cut tree nodes: blocks are 0..B-1, cut vertex v is B + v.
  const int nb = block_count();
  const int nv = static_cast<int>(vertex_blocks.size());
  auto node_of = [&](VertexId v) { return is_cut(v) ? nb + v : (vertex_blocks[v].empty() ? -1 : vertex_blocks[v][0]); };
  const int src = node_of(a), dst = node_of(b);
  if (src < 0 || dst < 0) throw Error(ErrorCode::DifferentComponents, "isolated endpoint");
  std::vector<int> parent(nb + nv, -2);
  std::deque<int> queue{src};
  parent[src] = -1;
  while (!queue.empty() && parent[dst] == -2) {
    int x = queue.front();
    queue.pop_front();
    auto visit = [&](int y) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    };
    if (x < nb) {
      for (VertexId w : block_vertices[x])
        if (is_cut(w)) visit(nb + w);
    } else {
      for (int blk : vertex_blocks[x - nb]) visit(blk);
    }
  }
  if (parent[dst] == -2) throw Error(ErrorCode::DifferentComponents, "vertices lie in different components");
  std::vector<VertexId> cuts;
  for (int x = dst; x != -1; x = parent[x])
    if (x >= nb && x - nb != a && x - nb != b) cuts.push_back(x - nb);
  std::reverse(cuts.begin(), cuts.end());
  return cuts;
}

BlockDecomposition compute_blocks(int n, const std::vector<std::pair<VertexId, VertexId>>& ends) {
  BlockDecomposition out;
  out.edge_block.assign(ends.size(), -1);
  out.vertex_blocks.assign(n, {});
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(ends.size()); ++e) {
    auto [a, b] = ends[e];
    if (a == kNone) continue;
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  // Iterative Hopcroft-Tarjan with an edge stack.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next < adj[fr.v].size()) {
        auto [w, e] = adj[fr.v][fr.next++];
        if (e == fr.via) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[fr.v]) {
          edge_stack.push_back(e);
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
        continue;
      }
      const VertexId v = fr.v;
      const EdgeId via = fr.via;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        const int id = out.block_count();
        out.block_edges.emplace_back();
        std::vector<VertexId> verts;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block[e] = id;
          out.block_edges[id].push_back(e);
          verts.push_back(ends[e].first);
          verts.push_back(ends[e].second);
          if (e == via) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(out.block_edges[id].begin(), out.block_edges[id].end());
        for (VertexId w : verts) out.vertex_blocks[w].push_back(id);
        out.block_vertices.push_back(std::move(verts));
      }
    }
  }
  for (auto& blocks : out.vertex_blocks) std::sort(blocks.begin(), blocks.end());
  return out;
}

BlockDecomposition compute_blocks(const EmbeddedGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> ends(g.edge_capacity(), {kNone, kNone});
  for (EdgeId e : g.edges()) ends[e] = g.endpoints(e);
  return compute_blocks(g.vertex_count(), ends);
}

BlockDecomposition compute_blocks(const EdgeListGraph& g) { return compute_blocks(g.n, g.edges); }

}  // namespace dynplanar
