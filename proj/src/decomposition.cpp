#include "dynplanar/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dynplanar/blocks.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {

namespace {

using Pair = std::pair<VertexId, VertexId>;

Pair ordered(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  std::vector<int> path;
  if (parent[to] == -2) return path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_tree(const std::vector<std::vector<int>>& adj) {
  if (adj.empty()) return false;
  std::size_t half_edges = 0;
  for (const auto& a : adj) half_edges += a.size();
  if (half_edges != 2 * (adj.size() - 1)) return false;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == adj.size();
}

// Connected after deleting the listed vertices? Only vertices in `alive` count.
bool connected_without(const std::vector<VertexId>& alive, const std::vector<Pair>& edges,
                       const std::set<VertexId>& removed) {
  std::map<VertexId, int> id;
  for (VertexId v : alive)
    if (!removed.count(v)) id.emplace(v, static_cast<int>(id.size()));
  if (id.size() <= 1) return true;
  UnionFind uf(static_cast<int>(id.size()));
  int parts = static_cast<int>(id.size());
  for (auto [a, b] : edges)
    if (!removed.count(a) && !removed.count(b) && uf.unite(id.at(a), id.at(b))) --parts;
  return parts == 1;
}

std::vector<std::vector<int>> adjacency_of(const std::vector<BCNode>& nodes) {
  std::vector<std::vector<int>> adj;
  for (const auto& n : nodes) adj.push_back(n.adj);
  return adj;
}

std::vector<std::vector<int>> adjacency_of(const std::vector<SPQRNode>& nodes) {
  std::vector<std::vector<int>> adj;
  for (const auto& n : nodes) adj.push_back(n.adj);
  return adj;
}

// Heavy-path decomposition of a rooted tree. `forced`, if nonempty, starts at
// the root and becomes the first path verbatim; every other path follows the
// heaviest child.
std::vector<SolidPath> heavy_paths(const std::vector<std::vector<int>>& adj, int root, const std::vector<int>& forced) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : adj[order[i]])
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }
  std::vector<int> weight(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) weight[parent[*it]] += weight[*it];

  std::vector<SolidPath> paths;
  std::deque<int> starts{root};
  while (!starts.empty()) {
    const int start = starts.front();
    starts.pop_front();
    SolidPath path;
    if (start == root && !forced.empty()) {
      path.nodes = forced;
      path.critical = true;
    } else {
      for (int x = start; x >= 0;) {
        path.nodes.push_back(x);
        int best = -1;
        for (int y : adj[x])
          if (y != parent[x] && (best < 0 || weight[y] > weight[best] || (weight[y] == weight[best] && y < best)))
            best = y;
        x = best;
      }
    }
    std::set<int> on_path(path.nodes.begin(), path.nodes.end());
    for (int x : path.nodes) {
      std::vector<int> kids;
      for (int y : adj[x])
        if (y != parent[x] && !on_path.count(y)) kids.push_back(y);
      std::sort(kids.begin(), kids.end());
      starts.insert(starts.end(), kids.begin(), kids.end());
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

// ---------------------------------------------------------------- BC tree

int BCTree::node_of(VertexId v) const {
  int block = -1;
  for (int i = 0; i < size(); ++i) {
    const BCNode& x = nodes[i];
    if (!std::binary_search(x.vertices.begin(), x.vertices.end(), v)) continue;
    if (x.kind == BCKind::Cut) return i;
    if (block < 0) block = i;
  }
  return block;
}

std::vector<std::string> BCTree::check() const {
  std::vector<std::string> out;
  if (!is_tree(adjacency_of(nodes))) out.push_back("not a tree");
  for (int i = 0; i < size(); ++i) {
    const BCNode& x = nodes[i];
    const std::string name = std::to_string(i);
    for (int j : x.adj)
      if (nodes[j].kind == x.kind)
        out.push_back("node " + name + " neighbours node " + std::to_string(j) + " of the same kind");
    if (x.kind == BCKind::Cut) {
      if (x.vertices.size() != 1 || x.adj.size() < 2) out.push_back("cut node " + name + " malformed");
      for (int j : x.adj)
        if (!std::binary_search(nodes[j].vertices.begin(), nodes[j].vertices.end(), x.vertices[0]))
          out.push_back("cut node " + name + " adjacent to a block without its vertex");
      continue;
    }
    if (x.edges.empty()) out.push_back("block " + name + " has no edges");
    if (x.edges.size() > 1) {
      for (VertexId w : x.vertices)
        if (!connected_without(x.vertices, x.edges, {w}))
          out.push_back("block " + name + " is separated by vertex " + std::to_string(w));
    }
  }
  return out;
}

std::string BCTree::to_dot() const {
  std::ostringstream os;
  os << "graph bc {\n";
  for (int i = 0; i < size(); ++i) {
    const BCNode& x = nodes[i];
    os << "  n" << i << " [label=\"" << (x.kind == BCKind::Block ? "B" : "C") << i << ":";
    for (VertexId w : x.vertices) os << ' ' << w;
    os << "\"" << (x.kind == BCKind::Cut ? ", shape=box" : "") << "];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (int j : nodes[i].adj)
      if (i < j) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

BCTree bc_tree(const EdgeListGraph& component) {
  if (component.edges.empty()) throw Error(ErrorCode::EmptyComponent, "component has no edges");
  const BlockDecomposition blocks = compute_blocks(component);
  BCTree tree;
  for (int b = 0; b < blocks.block_count(); ++b) {
    BCNode node;
    node.vertices = blocks.block_vertices[b];
    for (EdgeId e : blocks.block_edges[b]) node.edges.push_back(ordered(component.edges[e].first, component.edges[e].second));
    tree.nodes.push_back(std::move(node));
  }
  for (VertexId v = 0; v < component.n; ++v) {
    if (!blocks.is_cut(v)) continue;
    const int id = tree.size();
    BCNode node;
    node.kind = BCKind::Cut;
    node.vertices = {v};
    for (int b : blocks.vertex_blocks[v]) {
      node.adj.push_back(b);
      tree.nodes[b].adj.push_back(id);
    }
    tree.nodes.push_back(std::move(node));
  }
  if (!is_tree(adjacency_of(tree.nodes)))
    throw Error(ErrorCode::DifferentComponents, "edges span more than one component");
  return tree;
}

std::vector<int> critical_path(const BCTree& tree, VertexId u, VertexId v) {
  const int from = tree.node_of(u), to = tree.node_of(v);
  if (from < 0 || to < 0) throw Error(ErrorCode::DifferentComponents, "vertex not in this component");
  return tree_path(adjacency_of(tree.nodes), from, to);
}

// -------------------------------------------------------------- SPQR tree

const char* spqr_kind_name(SPQRKind kind) {
  switch (kind) {
    case SPQRKind::S: return "S";
    case SPQRKind::P: return "P";
    case SPQRKind::R: return "R";
  }
  return "?";
}

bool SPQRNode::has_vertex(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

const SkeletonEdge& SPQRNode::virtual_toward(int other) const {
  for (const SkeletonEdge& e : edges)
    if (e.real < 0 && e.neighbor == other) return e;
  throw std::logic_error("no virtual edge toward node " + std::to_string(other));
}

namespace {

struct WorkEdge {
  VertexId a, b;
  int real;
  int virtual_id;
};

struct Piece {
  SPQRKind kind;
  std::vector<WorkEdge> edges;
};

std::vector<VertexId> endpoints_of(const std::vector<WorkEdge>& edges) {
  std::vector<VertexId> out;
  for (const WorkEdge& e : edges) out.push_back(e.a), out.push_back(e.b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Split-pair recursion: peel off bonds, then split at any separation pair,
// until every piece is a bond, a cycle or triconnected.
std::vector<Piece> split_components(std::vector<WorkEdge> all) {
  std::vector<Piece> done;
  std::vector<std::vector<WorkEdge>> pending{std::move(all)};
  int next_virtual = 0;
  while (!pending.empty()) {
    std::vector<WorkEdge> edges = std::move(pending.back());
    pending.pop_back();
    const std::vector<VertexId> verts = endpoints_of(edges);
    if (verts.size() == 2) {
      done.push_back({SPQRKind::P, std::move(edges)});
      continue;
    }
    std::map<Pair, std::vector<int>> bundles;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) bundles[ordered(edges[i].a, edges[i].b)].push_back(i);
    bool split = false;
    for (auto& [pair, members] : bundles) {
      if (members.size() < 2) continue;
      const int id = next_virtual++;
      std::vector<WorkEdge> bond, rest;
      std::set<int> in_bond(members.begin(), members.end());
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) (in_bond.count(i) ? bond : rest).push_back(edges[i]);
      bond.push_back({pair.first, pair.second, -1, id});
      rest.push_back({pair.first, pair.second, -1, id});
      done.push_back({SPQRKind::P, std::move(bond)});
      pending.push_back(std::move(rest));
      split = true;
      break;
    }
    if (split) continue;

    std::map<VertexId, int> degree;
    for (const WorkEdge& e : edges) ++degree[e.a], ++degree[e.b];
    if (std::all_of(degree.begin(), degree.end(), [](auto& d) { return d.second == 2; })) {
      done.push_back({SPQRKind::S, std::move(edges)});
      continue;
    }

    const int m = static_cast<int>(edges.size());
    for (std::size_t i = 0; i < verts.size() && !split; ++i)
      for (std::size_t j = i + 1; j < verts.size() && !split; ++j) {
        const VertexId a = verts[i], b = verts[j];
        UnionFind uf(m);
        std::map<VertexId, int> seen;
        for (int k = 0; k < m; ++k)
          for (VertexId w : {edges[k].a, edges[k].b}) {
            if (w == a || w == b) continue;
            auto [it, fresh] = seen.emplace(w, k);
            if (!fresh) uf.unite(it->second, k);
          }
        std::map<int, std::vector<int>> classes;
        for (int k = 0; k < m; ++k) classes[uf.find(k)].push_back(k);
        if (classes.size() < 2) continue;
        for (auto& [rep, members] : classes) {
          const int size = static_cast<int>(members.size());
          if (size < 2 || m - size < 2) continue;
          const int id = next_virtual++;
          std::vector<WorkEdge> side, rest;
          std::set<int> in_side(members.begin(), members.end());
          for (int k = 0; k < m; ++k) (in_side.count(k) ? side : rest).push_back(edges[k]);
          side.push_back({a, b, -1, id});
          rest.push_back({a, b, -1, id});
          pending.push_back(std::move(side));
          pending.push_back(std::move(rest));
          split = true;
          break;
        }
      }
    if (!split) done.push_back({SPQRKind::R, std::move(edges)});
  }
  return done;
}

}  // namespace

SPQRTree spqr_tree(const EdgeListGraph& block) {
  if (block.edges.size() < 3) throw Error(ErrorCode::TooSmall, "an SPQR tree needs at least three edges");
  {
    std::vector<VertexId> verts;
    for (auto [a, b] : block.edges) verts.push_back(a), verts.push_back(b);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Pair> pairs(block.edges.begin(), block.edges.end());
    if (!connected_without(verts, pairs, {}))
      throw std::invalid_argument("block is not connected");
    for (VertexId w : verts)
      if (!connected_without(verts, pairs, {w})) throw std::invalid_argument("block is not biconnected");
  }

  std::vector<WorkEdge> work;
  for (int i = 0; i < static_cast<int>(block.edges.size()); ++i)
    work.push_back({block.edges[i].first, block.edges[i].second, i, -1});
  std::vector<Piece> pieces = split_components(std::move(work));

  // Merge neighbouring bonds and neighbouring cycles.
  std::map<int, std::vector<int>> holders;
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p)
    for (const WorkEdge& e : pieces[p].edges)
      if (e.real < 0) holders[e.virtual_id].push_back(p);
  UnionFind groups(static_cast<int>(pieces.size()));
  for (auto& [id, ps] : holders) {
    const int x = groups.find(ps[0]), y = groups.find(ps[1]);
    if (pieces[x].kind != pieces[y].kind || pieces[x].kind == SPQRKind::R) continue;
    auto drop = [id = id](std::vector<WorkEdge>& es) {
      es.erase(std::remove_if(es.begin(), es.end(), [&](const WorkEdge& e) { return e.virtual_id == id; }), es.end());
    };
    drop(pieces[x].edges);
    drop(pieces[y].edges);
    const int keep = std::min(x, y), gone = std::max(x, y);
    if (keep != x) std::swap(pieces[keep], pieces[gone]);
    for (const WorkEdge& e : pieces[gone].edges) pieces[keep].edges.push_back(e);
    pieces[gone].edges.clear();
    groups.unite(keep, gone);
  }

  SPQRTree tree;
  tree.block = block;
  std::map<int, int> node_of_piece;
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p)
    if (groups.find(p) == p) {
      node_of_piece[p] = tree.size();
      SPQRNode node;
      node.kind = pieces[p].kind;
      node.vertices = endpoints_of(pieces[p].edges);
      tree.nodes.push_back(std::move(node));
    }
  std::map<int, std::vector<int>> virtual_nodes;
  for (auto& [p, id] : node_of_piece)
    for (const WorkEdge& e : pieces[p].edges)
      if (e.real < 0) virtual_nodes[e.virtual_id].push_back(id);
  for (auto& [p, id] : node_of_piece)
    for (const WorkEdge& e : pieces[p].edges) {
      SkeletonEdge se{std::min(e.a, e.b), std::max(e.a, e.b), e.real, -1};
      if (e.real < 0) {
        const auto& two = virtual_nodes.at(e.virtual_id);
        se.neighbor = two[0] == id ? two[1] : two[0];
        tree.nodes[id].adj.push_back(se.neighbor);
      }
      tree.nodes[id].edges.push_back(se);
    }
  for (SPQRNode& node : tree.nodes) std::sort(node.adj.begin(), node.adj.end());
  return tree;
}

std::vector<std::string> SPQRTree::check() const {
  std::vector<std::string> out;
  if (!is_tree(adjacency_of(nodes))) out.push_back("not a tree");
  std::vector<int> real_seen(block.edges.size(), 0);
  for (int i = 0; i < size(); ++i) {
    const SPQRNode& x = nodes[i];
    const std::string name = std::string(spqr_kind_name(x.kind)) + std::to_string(i);
    std::vector<Pair> pairs;
    for (const SkeletonEdge& e : x.edges) {
      pairs.emplace_back(e.a, e.b);
      if (e.real >= 0) {
        ++real_seen[e.real];
        if (ordered(block.edges[e.real].first, block.edges[e.real].second) != Pair{e.a, e.b})
          out.push_back(name + " misplaces a real edge");
        continue;
      }
      const SPQRNode& y = nodes[e.neighbor];
      int matches = 0;
      for (const SkeletonEdge& f : y.edges)
        if (f.real < 0 && f.neighbor == i && f.a == e.a && f.b == e.b) ++matches;
      if (matches != 1) out.push_back(name + " has an unpaired virtual edge");
      std::vector<VertexId> common;
      std::set_intersection(x.vertices.begin(), x.vertices.end(), y.vertices.begin(), y.vertices.end(),
                            std::back_inserter(common));
      if (common != std::vector<VertexId>{e.a, e.b}) out.push_back(name + " shares more than its separation pair");
    }
    for (int j : x.adj)
      if (nodes[j].kind == x.kind && x.kind != SPQRKind::R) out.push_back(name + " neighbours a node of its kind");
    std::set<Pair> distinct(pairs.begin(), pairs.end());
    switch (x.kind) {
      case SPQRKind::P:
        if (x.vertices.size() != 2 || x.edges.size() < 3) out.push_back(name + " is not a bond of three or more edges");
        break;
      case SPQRKind::S: {
        std::map<VertexId, int> degree;
        for (auto [a, b] : pairs) ++degree[a], ++degree[b];
        bool cycle = x.edges.size() >= 3 && distinct.size() == pairs.size() && connected_without(x.vertices, pairs, {});
        for (auto& [w, d] : degree) cycle = cycle && d == 2;
        if (!cycle) out.push_back(name + " is not a simple cycle");
        break;
      }
      case SPQRKind::R: {
        bool ok = x.vertices.size() >= 4 && distinct.size() == pairs.size();
        for (std::size_t a = 0; ok && a < x.vertices.size(); ++a)
          for (std::size_t b = a + 1; ok && b < x.vertices.size(); ++b)
            ok = connected_without(x.vertices, pairs, {x.vertices[a], x.vertices[b]});
        if (!ok) out.push_back(name + " is not simple and triconnected");
        break;
      }
    }
  }
  for (std::size_t e = 0; e < real_seen.size(); ++e)
    if (real_seen[e] != 1) out.push_back("edge " + std::to_string(e) + " appears " + std::to_string(real_seen[e]) + " times");
  return out;
}

std::vector<int> SPQRTree::reglued_edges() const {
  std::vector<int> out;
  for (const SPQRNode& x : nodes)
    for (const SkeletonEdge& e : x.edges)
      if (e.real >= 0) out.push_back(e.real);
  std::sort(out.begin(), out.end());
  return out;
}

std::string SPQRTree::to_dot() const {
  std::ostringstream os;
  os << "graph spqr {\n";
  for (int i = 0; i < size(); ++i) {
    os << "  n" << i << " [label=\"" << spqr_kind_name(nodes[i].kind) << i << ":";
    for (const SkeletonEdge& e : nodes[i].edges) os << ' ' << e.a << '-' << e.b << (e.real < 0 ? "*" : "");
    os << "\"];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (int j : nodes[i].adj)
      if (i < j) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<int> critical_path(const SPQRTree& tree, VertexId u, VertexId v) {
  std::vector<int> from, to;
  for (int i = 0; i < tree.size(); ++i) {
    if (tree.nodes[i].kind == SPQRKind::P) continue;
    if (tree.nodes[i].has_vertex(u)) from.push_back(i);
    if (tree.nodes[i].has_vertex(v)) to.push_back(i);
  }
  if (from.empty() || to.empty()) throw Error(ErrorCode::NotSameBlock, "vertex not in this block");
  const auto adj = adjacency_of(tree.nodes);
  std::vector<int> best;
  for (int a : from)
    for (int b : to) {
      std::vector<int> path = tree_path(adj, a, b);
      if (best.empty() || path.size() < best.size()) best = std::move(path);
    }
  return best;
}

std::vector<int> bc_critical_path(const EdgeListGraph& g, VertexId u, VertexId v) {
  const BlockDecomposition blocks = compute_blocks(g);
  EdgeListGraph comp{g.n, {}};
  UnionFind uf(g.n);
  for (auto [a, b] : g.edges) uf.unite(a, b);
  if (uf.find(u) != uf.find(v)) throw Error(ErrorCode::DifferentComponents, "vertices lie in different components");
  for (auto [a, b] : g.edges)
    if (uf.find(a) == uf.find(u)) comp.edges.emplace_back(a, b);
  return critical_path(bc_tree(comp), u, v);
}

std::vector<int> spqr_critical_path(const EdgeListGraph& g, VertexId u, VertexId v) {
  const BlockDecomposition blocks = compute_blocks(g);
  const int b = blocks.common_block(u, v);
  if (b < 0) throw Error(ErrorCode::NotSameBlock, "vertices share no block");
  EdgeListGraph block{g.n, {}};
  for (EdgeId e : blocks.block_edges[b]) block.edges.push_back(g.edges[e]);
  return critical_path(spqr_tree(block), u, v);
}

std::vector<SkeletonFace> skeleton_faces(const SPQRNode& node) {
  std::vector<SkeletonFace> faces;
  if (node.kind != SPQRKind::R) {
    SkeletonFace all;
    all.vertices = node.vertices;
    for (const SkeletonEdge& e : node.edges) all.edges.emplace_back(e.a, e.b);
    const std::size_t copies = node.kind == SPQRKind::S ? 2 : node.edges.size();
    faces.assign(copies, all);
    return faces;
  }
  std::map<VertexId, VertexId> local;
  for (VertexId w : node.vertices) local.emplace(w, static_cast<VertexId>(local.size()));
  EdgeListGraph skeleton{static_cast<int>(local.size()), {}};
  for (const SkeletonEdge& e : node.edges) skeleton.edges.emplace_back(local.at(e.a), local.at(e.b));
  const std::optional<RotationSystem> rotation = find_embedding_static(skeleton);
  if (!rotation) throw std::logic_error("R skeleton is not planar");
  const RotationSystem& rot = *rotation;
  // Dart (x -> y) continues as (y -> successor of x around y).
  std::set<Pair> used;
  for (VertexId x = 0; x < skeleton.n; ++x)
    for (VertexId y : rot[x]) {
      if (used.count({x, y})) continue;
      SkeletonFace face;
      std::set<VertexId> verts;
      VertexId a = x, b = y;
      while (used.insert({a, b}).second) {
        verts.insert(node.vertices[a]);
        face.edges.push_back(ordered(node.vertices[a], node.vertices[b]));
        const auto& around = rot[b];
        const auto at = std::find(around.begin(), around.end(), a) - around.begin();
        const VertexId c = around[(at + 1) % around.size()];
        a = b;
        b = c;
      }
      face.vertices.assign(verts.begin(), verts.end());
      std::sort(face.edges.begin(), face.edges.end());
      faces.push_back(std::move(face));
    }
  return faces;
}

// ------------------------------------------------------------ solid paths

const BlockSolidPaths& ComponentSolidPaths::block_at(int bc_node) const {
  for (const BlockSolidPaths& b : blocks)
    if (b.bc_node == bc_node) return b;
  throw std::out_of_range("no block at node " + std::to_string(bc_node));
}

std::string SolidPathSet::to_dot() const {
  std::ostringstream os;
  os << "digraph solid {\n  // critical pair " << u << ' ' << v << "\n";
  for (std::size_t c = 0; c < components.size(); ++c) {
    const ComponentSolidPaths& comp = components[c];
    const std::string prefix = "c" + std::to_string(c) + "_";
    for (int i = 0; i < comp.tree.size(); ++i) {
      const BCNode& x = comp.tree.nodes[i];
      os << "  " << prefix << i << " [label=\"" << (x.kind == BCKind::Block ? "B" : "C");
      for (VertexId w : x.vertices) os << ' ' << w;
      os << "\"];\n";
    }
    for (const SolidPath& p : comp.paths)
      for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k)
        os << "  " << prefix << p.nodes[k] << " -> " << prefix << p.nodes[k + 1] << (p.critical ? " [color=red]" : "")
           << ";\n";
    for (const BlockSolidPaths& b : comp.blocks) {
      if (!b.spqr) continue;
      const std::string inner = prefix + "b" + std::to_string(b.bc_node) + "_";
      for (int i = 0; i < b.spqr->size(); ++i)
        os << "  " << inner << i << " [label=\"" << spqr_kind_name(b.spqr->nodes[i].kind) << i << "\"];\n";
      for (const SolidPath& p : b.paths)
        for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k)
          os << "  " << inner << p.nodes[k] << " -> " << inner << p.nodes[k + 1]
             << (p.critical ? " [color=red]" : "") << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

SolidPathSet presplit_decomposition(const EdgeListGraph& g, VertexId u, VertexId v) {
  SolidPathSet out;
  out.u = u;
  out.v = v;
  UnionFind uf(g.n);
  for (auto [a, b] : g.edges) uf.unite(a, b);
  out.same_component = uf.find(u) == uf.find(v);

  std::map<int, EdgeListGraph> by_root;  // keyed by smallest vertex, which is the union-find root
  for (auto [a, b] : g.edges) {
    auto& comp = by_root.try_emplace(uf.find(a), EdgeListGraph{g.n, {}}).first->second;
    comp.edges.emplace_back(a, b);
  }
  for (auto& [smallest, comp] : by_root) {
    ComponentSolidPaths cs;
    cs.tree = bc_tree(comp);
    const auto adj = adjacency_of(cs.tree.nodes);
    const bool has_u = uf.find(u) == smallest, has_v = uf.find(v) == smallest;
    cs.root_vertex = has_u ? u : has_v ? v : static_cast<VertexId>(smallest);
    cs.root = cs.tree.node_of(cs.root_vertex);
    std::vector<int> forced;
    if (has_u && has_v) forced = critical_path(cs.tree, u, v);
    cs.paths = heavy_paths(adj, cs.root, forced);

    std::vector<int> parent(cs.tree.size(), -1);
    {
      std::deque<int> queue{cs.root};
      std::vector<char> seen(cs.tree.size(), 0);
      seen[cs.root] = 1;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
          if (!seen[y]) {
            seen[y] = 1;
            parent[y] = x;
            queue.push_back(y);
          }
      }
    }

    std::vector<BlockSolidPaths> blocks(cs.tree.size());
    for (SolidPath& p : cs.paths) {
      std::vector<int> bnodes;
      for (int x : p.nodes)
        if (cs.tree.nodes[x].kind == BCKind::Block) bnodes.push_back(x);
      if (p.critical) {
        p.first = u;
        p.last = v;
      } else {
        const int head = p.nodes.front();
        if (cs.tree.nodes[head].kind == BCKind::Cut) p.first = cs.tree.nodes[head].vertices[0];
        else if (parent[head] >= 0) p.first = cs.tree.nodes[parent[head]].vertices[0];
        else p.first = cs.root_vertex;
        const int tail = p.nodes.back();
        if (cs.tree.nodes[tail].kind == BCKind::Cut) {
          p.last = cs.tree.nodes[tail].vertices[0];
        } else {
          const VertexId above = bnodes.size() >= 2 ? cs.tree.nodes[p.nodes[p.nodes.size() - 2]].vertices[0] : p.first;
          for (VertexId w : cs.tree.nodes[tail].vertices)
            if (w != above) {
              p.last = w;
              break;
            }
        }
      }
      for (std::size_t i = 0; i < bnodes.size(); ++i) {
        BlockSolidPaths& bp = blocks[bnodes[i]];
        bp.bc_node = bnodes[i];
        // The cut vertex between consecutive B nodes sits between them on the path.
        auto cut_between = [&](int b1, int b2) {
          for (std::size_t k = 0; k + 2 < p.nodes.size(); ++k)
            if (p.nodes[k] == b1 && p.nodes[k + 2] == b2) return cs.tree.nodes[p.nodes[k + 1]].vertices[0];
          throw std::logic_error("blocks not consecutive on a solid path");
        };
        bp.first = i == 0 ? p.first : cut_between(bnodes[i - 1], bnodes[i]);
        bp.last = i + 1 == bnodes.size() ? p.last : cut_between(bnodes[i], bnodes[i + 1]);
      }
    }
    for (int x = 0; x < cs.tree.size(); ++x) {
      if (cs.tree.nodes[x].kind != BCKind::Block) continue;
      BlockSolidPaths bp = std::move(blocks[x]);
      if (cs.tree.nodes[x].edges.size() >= 3) {
        EdgeListGraph block{g.n, cs.tree.nodes[x].edges};
        bp.spqr = spqr_tree(block);
        const std::vector<int> crit = critical_path(*bp.spqr, bp.first, bp.last);
        bp.root = crit.front();
        bp.paths = heavy_paths(adjacency_of(bp.spqr->nodes), bp.root, crit);
      }
      cs.blocks.push_back(std::move(bp));
    }
    out.components.push_back(std::move(cs));
  }
  return out;
}

}  // namespace dynplanar
