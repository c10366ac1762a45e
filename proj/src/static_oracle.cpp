#include "dynplanar/static_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace dynplanar {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const EdgeListGraph& g) {
  BoostGraph bg(g.n);
  int index = 0;
  for (auto [a, b] : g.edges) {
    auto [e, added] = boost::add_edge(a, b, bg);
    (void)added;
    boost::put(boost::edge_index, bg, e, index++);
  }
  return bg;
}

std::optional<RotationSystem> boyer_myrvold(const EdgeListGraph& g) {
  BoostGraph bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(g.n);
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) return std::nullopt;
  RotationSystem rot(g.n);
  for (int v = 0; v < g.n; ++v)
    for (const EdgeDesc& e : embedding[v]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  return rot;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Traces faces of the rotation system and checks V - E + F = 2 per component.
bool euler_holds(const EdgeListGraph& g, const std::vector<std::vector<int>>& rot,
                 const std::vector<int>& comp, int comp_count) {
  // position[v][w] lookups kept small: linear search is fine at this scale.
  auto index_of = [&](int v, int w) {
    const auto& r = rot[v];
    return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
  };
  std::vector<std::vector<char>> seen(g.n);
  for (int v = 0; v < g.n; ++v) seen[v].assign(rot[v].size(), 0);
  std::vector<int> faces(comp_count, 0), verts(comp_count, 0), edges(comp_count, 0);
  for (int v = 0; v < g.n; ++v) ++verts[comp[v]];
  for (auto [a, b] : g.edges) ++edges[comp[a]];
  for (int v = 0; v < g.n; ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      if (seen[v][i]) continue;
      ++faces[comp[v]];
      int x = v, k = i;
      while (!seen[x][k]) {
        seen[x][k] = 1;
        int y = rot[x][k];
        int back = index_of(y, x);
        k = (back + 1) % static_cast<int>(rot[y].size());
        x = y;
      }
    }
  for (int c = 0; c < comp_count; ++c) {
    if (edges[c] == 0) continue;
    if (verts[c] - edges[c] + faces[c] != 2) return false;
  }
  return true;
}

}  // namespace

bool is_planar_by_enumeration(const EdgeListGraph& g) {
  std::vector<std::vector<int>> rot(g.n);
  for (auto [a, b] : g.edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  UnionFind uf(g.n);
  for (auto [a, b] : g.edges) uf.unite(a, b);
  std::vector<int> comp(g.n, -1), root_id(g.n, -1);
  int comp_count = 0;
  for (int v = 0; v < g.n; ++v) {
    int r = uf.find(v);
    if (root_id[r] < 0) root_id[r] = comp_count++;
    comp[v] = root_id[r];
  }
  // The first neighbour of each vertex stays fixed; the tails are permuted
  // like an odometer, which visits every cyclic order exactly once.
  for (auto& r : rot)
    if (r.size() > 2) std::sort(r.begin() + 1, r.end());
  while (true) {
    if (euler_holds(g, rot, comp, comp_count)) return true;
    int v = 0;
    for (; v < g.n; ++v) {
      if (rot[v].size() <= 2) continue;
      if (std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
    }
    if (v == g.n) return false;
  }
}

bool is_planar_static(const EdgeListGraph& g) {
  const int n = g.n, m = static_cast<int>(g.edges.size());
  bool planar;
  if (n >= 3 && m > 3 * n - 6)
    planar = false;
  else
    planar = boyer_myrvold(g).has_value();
  if (m <= kEnumerationEdgeLimit && planar != is_planar_by_enumeration(g))
    throw std::logic_error("static planarity oracles disagree");
  return planar;
}

std::optional<RotationSystem> find_embedding_static(const EdgeListGraph& g) { return boyer_myrvold(g); }

}  // namespace dynplanar

namespace dynplanar {

std::vector<bool> component_planarity_static(const EdgeListGraph& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  // Renumber each component's vertices and test it on its own.
  std::vector<int> local(g.n), size(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v) local[v] = size[find(v)]++;
  std::vector<EdgeListGraph> parts(g.n);
  for (VertexId v = 0; v < g.n; ++v) parts[find(v)].n = size[find(v)];
  for (auto [a, b] : g.edges) parts[find(a)].edges.emplace_back(local[a], local[b]);
  std::vector<char> root_planar(g.n, 1);
  for (VertexId r = 0; r < g.n; ++r)
    if (find(r) == r && !parts[r].edges.empty()) root_planar[r] = boyer_myrvold(parts[r]).has_value();
  std::vector<bool> out(g.n);
  for (VertexId v = 0; v < g.n; ++v) out[v] = root_planar[find(v)];
  return out;
}

}  // namespace dynplanar
