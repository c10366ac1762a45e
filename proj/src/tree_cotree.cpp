#include "dynplanar/tree_cotree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dynplanar {

bool CycleHandle::contains_vertex(VertexId v) const { return index_of(v) >= 0; }

bool CycleHandle::contains_edge(EdgeId e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

int CycleHandle::index_of(VertexId v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

TreeCotreeIndex::TreeCotreeIndex(const EmbeddedGraph& g, Backend backend) : g_(g), backend_(backend) {}

void TreeCotreeIndex::ensure() const {
  if (version_ != g_.version()) rebuild();
}

void TreeCotreeIndex::rebuild() const {
  const int n = g_.vertex_count();
  const int faces = g_.face_count();
  cycle_cache_.clear();
  in_tree_.assign(static_cast<std::size_t>(g_.edge_capacity()), 0);
  vparent_.assign(n, kNone);
  vparent_edge_.assign(n, kNone);
  vdepth_.assign(n, -1);
  vroot_.assign(n, kNone);
  for (VertexId r = 0; r < n; ++r) {
    if (vdepth_[r] >= 0) continue;
    vdepth_[r] = 0;
    vroot_[r] = r;
    std::deque<VertexId> queue{r};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (DartId d : g_.darts_at(x)) {
        VertexId w = g_.head(d);
        if (vdepth_[w] >= 0) continue;
        vdepth_[w] = vdepth_[x] + 1;
        vparent_[w] = x;
        vparent_edge_[w] = EmbeddedGraph::edge_of(d);
        vroot_[w] = r;
        in_tree_[EmbeddedGraph::edge_of(d)] = 1;
        queue.push_back(w);
      }
    }
  }

  orbit_.assign(faces, {});
  orbit_pos_.assign(static_cast<std::size_t>(g_.dart_capacity()), -1);
  for (FaceId f = 0; f < faces; ++f) {
    Corner rep = g_.face_representative(f);
    if (rep.is_null()) continue;
    DartId d = rep.dart;
    do {
      orbit_pos_[d] = static_cast<int>(orbit_[f].size());
      orbit_[f].push_back(d);
      d = g_.face_next(d);
    } while (d != rep.dart);
  }

  fparent_.assign(faces, kNone);
  fparent_edge_.assign(faces, kNone);
  fdepth_.assign(faces, -1);
  froot_.assign(faces, kNone);
  for (FaceId r = 0; r < faces; ++r) {
    if (fdepth_[r] >= 0) continue;
    fdepth_[r] = 0;
    froot_[r] = r;
    std::deque<FaceId> queue{r};
    while (!queue.empty()) {
      FaceId f = queue.front();
      queue.pop_front();
      for (DartId d : orbit_[f]) {
        EdgeId e = EmbeddedGraph::edge_of(d);
        if (in_tree_[e]) continue;
        FaceId h = g_.face_of_dart(g_.twin(d));
        if (fdepth_[h] >= 0) continue;
        fdepth_[h] = fdepth_[f] + 1;
        fparent_[h] = f;
        fparent_edge_[h] = e;
        froot_[h] = r;
        queue.push_back(h);
      }
    }
  }
  version_ = g_.version();
}

bool TreeCotreeIndex::in_primal_tree(EdgeId e) const {
  ensure();
  if (!g_.edge_alive(e)) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
  return in_tree_[e];
}

VertexId TreeCotreeIndex::primal_parent(VertexId v) const {
  ensure();
  return vparent_.at(v);
}

EdgeId TreeCotreeIndex::primal_parent_edge(VertexId v) const {
  ensure();
  return vparent_edge_.at(v);
}

int TreeCotreeIndex::primal_depth(VertexId v) const {
  ensure();
  return vdepth_.at(v);
}

FaceId TreeCotreeIndex::dual_parent(FaceId f) const {
  ensure();
  return fparent_.at(f);
}

EdgeId TreeCotreeIndex::dual_parent_edge(FaceId f) const {
  ensure();
  return fparent_edge_.at(f);
}

int TreeCotreeIndex::dual_depth(FaceId f) const {
  ensure();
  return fdepth_.at(f);
}

std::vector<EdgeId> TreeCotreeIndex::primal_tree_edges() const {
  ensure();
  std::vector<EdgeId> out;
  for (EdgeId e : g_.edges())
    if (in_tree_[e]) out.push_back(e);
  return out;
}

std::vector<EdgeId> TreeCotreeIndex::dual_tree_edges() const {
  ensure();
  std::vector<EdgeId> out;
  for (FaceId f = 0; f < static_cast<FaceId>(fparent_edge_.size()); ++f)
    if (fparent_edge_[f] != kNone) out.push_back(fparent_edge_[f]);
  std::sort(out.begin(), out.end());
  return out;
}

int TreeCotreeIndex::parent_of(TreeKind tree, int x) const { return tree == TreeKind::Primal ? vparent_[x] : fparent_[x]; }

int TreeCotreeIndex::depth_of(TreeKind tree, int x) const { return tree == TreeKind::Primal ? vdepth_[x] : fdepth_[x]; }

void TreeCotreeIndex::check_same_tree(TreeKind tree, int a, int b) const {
  const auto& root = tree == TreeKind::Primal ? vroot_ : froot_;
  if (a < 0 || b < 0 || a >= static_cast<int>(root.size()) || b >= static_cast<int>(root.size()))
    throw Error(ErrorCode::UnknownVertex, "node out of range");
  if (root[a] != root[b]) throw Error(ErrorCode::DifferentComponents, "nodes lie in different trees");
}

int TreeCotreeIndex::lca(TreeKind tree, int a, int b) const {
  while (depth_of(tree, a) > depth_of(tree, b)) a = parent_of(tree, a);
  while (depth_of(tree, b) > depth_of(tree, a)) b = parent_of(tree, b);
  while (a != b) {
    a = parent_of(tree, a);
    b = parent_of(tree, b);
  }
  return a;
}

std::vector<VertexId> TreeCotreeIndex::primal_path(VertexId a, VertexId b) const {
  ensure();
  check_same_tree(TreeKind::Primal, a, b);
  const VertexId top = lca(TreeKind::Primal, a, b);
  std::vector<VertexId> up, down;
  for (VertexId x = a; x != top; x = vparent_[x]) up.push_back(x);
  for (VertexId x = b; x != top; x = vparent_[x]) down.push_back(x);
  up.push_back(top);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<EdgeId> TreeCotreeIndex::primal_path_edges(VertexId a, VertexId b) const {
  ensure();
  check_same_tree(TreeKind::Primal, a, b);
  const VertexId top = lca(TreeKind::Primal, a, b);
  std::vector<EdgeId> up, down;
  for (VertexId x = a; x != top; x = vparent_[x]) up.push_back(vparent_edge_[x]);
  for (VertexId x = b; x != top; x = vparent_[x]) down.push_back(vparent_edge_[x]);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<FaceId> TreeCotreeIndex::dual_path(FaceId a, FaceId b) const {
  ensure();
  check_same_tree(TreeKind::Dual, a, b);
  const FaceId top = lca(TreeKind::Dual, a, b);
  std::vector<FaceId> up, down;
  for (FaceId x = a; x != top; x = fparent_[x]) up.push_back(x);
  for (FaceId x = b; x != top; x = fparent_[x]) down.push_back(x);
  up.push_back(top);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<EdgeId> TreeCotreeIndex::dual_path_edges(FaceId a, FaceId b) const {
  ensure();
  check_same_tree(TreeKind::Dual, a, b);
  const FaceId top = lca(TreeKind::Dual, a, b);
  std::vector<EdgeId> up, down;
  for (FaceId x = a; x != top; x = fparent_[x]) up.push_back(fparent_edge_[x]);
  for (FaceId x = b; x != top; x = fparent_[x]) down.push_back(fparent_edge_[x]);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

EdgeId TreeCotreeIndex::path_end_edge(TreeKind tree, int a, int b, PathEnd end) const {
  ensure();
  check_same_tree(tree, a, b);
  if (a == b) throw Error(ErrorCode::SameNode, "path has no edges");
  if (end == PathEnd::Last) std::swap(a, b);
  // The first edge from a leaves towards the LCA unless a is the LCA itself.
  const int top = lca(tree, a, b);
  if (a != top) return tree == TreeKind::Primal ? vparent_edge_[a] : fparent_edge_[a];
  int x = b;
  while (parent_of(tree, x) != a) x = parent_of(tree, x);
  return tree == TreeKind::Primal ? vparent_edge_[x] : fparent_edge_[x];
}

int TreeCotreeIndex::meet(TreeKind tree, int x, int y, int z) const {
  ensure();
  check_same_tree(tree, x, y);
  check_same_tree(tree, x, z);
  int a = lca(tree, x, y), b = lca(tree, y, z), c = lca(tree, x, z);
  int best = a;
  if (depth_of(tree, b) > depth_of(tree, best)) best = b;
  if (depth_of(tree, c) > depth_of(tree, best)) best = c;
  return best;
}

DartId TreeCotreeIndex::dart_from_to(VertexId a, VertexId b, EdgeId e) const {
  DartId d = 2 * e;
  if (g_.origin(d) == a && g_.head(d) == b) return d;
  return d + 1;
}

CycleHandle TreeCotreeIndex::fundamental_cycle(EdgeId e) const {
  ensure();
  if (!g_.edge_alive(e)) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
  if (in_tree_[e]) throw Error(ErrorCode::TreeEdge, "edge " + std::to_string(e) + " is a tree edge");
  if (auto hit = cycle_cache_.find(e); hit != cycle_cache_.end()) return hit->second;
  CycleHandle c;
  c.closing_edge = e;
  auto [a, b] = g_.endpoints(e);
  c.vertices = primal_path(a, b);
  c.edges = primal_path_edges(a, b);
  c.edges.push_back(e);

  // Label the two regions by flooding the dual without crossing the cycle.
  std::vector<char> on_cycle(static_cast<std::size_t>(g_.edge_capacity()), 0);
  for (EdgeId x : c.edges) on_cycle[x] = 1;
  c.face_side.assign(orbit_.size(), -1);
  const FaceId seeds[2] = {g_.face_of_dart(2 * e), g_.face_of_dart(2 * e + 1)};
  for (int side = 0; side < 2; ++side) {
    if (c.face_side[seeds[side]] >= 0) continue;
    std::deque<FaceId> queue{seeds[side]};
    c.face_side[seeds[side]] = static_cast<signed char>(side);
    while (!queue.empty()) {
      FaceId f = queue.front();
      queue.pop_front();
      for (DartId d : orbit_[f]) {
        if (on_cycle[EmbeddedGraph::edge_of(d)]) continue;
        FaceId h = g_.face_of_dart(g_.twin(d));
        if (c.face_side[h] >= 0) continue;
        c.face_side[h] = static_cast<signed char>(side);
        queue.push_back(h);
      }
    }
  }
  cycle_cache_.emplace(e, c);
  return c;
}

VertexId TreeCotreeIndex::projection(const CycleHandle& c, VertexId w) const {
  auto [a, b] = g_.endpoints(c.closing_edge);
  return meet(TreeKind::Primal, w, a, b);
}

std::pair<EdgeId, EdgeId> TreeCotreeIndex::cycle_edges_at(const CycleHandle& c, VertexId w) const {
  const int i = c.index_of(w);
  if (i < 0) throw Error(ErrorCode::NotOnCycle, "vertex " + std::to_string(w) + " is not on the cycle");
  const int k = static_cast<int>(c.edges.size());
  return {c.edges[(i + k - 1) % k], c.edges[i]};
}

int TreeCotreeIndex::side_of(const CycleHandle& c, FaceId f) const {
  if (f < 0 || f >= static_cast<FaceId>(c.face_side.size()) || c.face_side[f] < 0)
    throw Error(ErrorCode::NoSuchFace, "face " + std::to_string(f) + " not in the cycle's component");
  return c.face_side[f];
}

bool TreeCotreeIndex::same_side(const CycleHandle& c, FaceId f1, FaceId f2) const {
  return side_of(c, f1) == side_of(c, f2);
}

FaceId TreeCotreeIndex::face_on_side(const CycleHandle& c, EdgeId e, int side) const {
  FaceId f0 = g_.face_of_dart(2 * e), f1 = g_.face_of_dart(2 * e + 1);
  if (side_of(c, f0) == side) return f0;
  if (side_of(c, f1) == side) return f1;
  return kNone;
}

DualCycle TreeCotreeIndex::dual_fundamental_cycle(EdgeId tree_edge) const {
  ensure();
  if (!g_.edge_alive(tree_edge) || !in_tree_[tree_edge])
    throw Error(ErrorCode::TreeEdge, "dual cycles are closed by primal tree edges");
  DualCycle out;
  FaceId a = g_.face_of_dart(2 * tree_edge), b = g_.face_of_dart(2 * tree_edge + 1);
  out.faces = dual_path(a, b);
  out.crossed = dual_path_edges(a, b);
  out.crossed.push_back(tree_edge);
  return out;
}

std::optional<std::pair<Corner, Corner>> TreeCotreeIndex::linkable(VertexId u, VertexId v) const {
  if (g_.component_of(u) != g_.component_of(v))
    throw Error(ErrorCode::DifferentComponents, "linkable across components");
  for (Corner cu : g_.corners_at(u)) {
    FaceId f = g_.face_of(cu);
    for (Corner cv : g_.corners_at(v))
      if (g_.face_of(cv) == f) return std::make_pair(cu, cv);
  }
  return std::nullopt;
}

std::vector<FaceCrossing> TreeCotreeIndex::dual_crossings(Corner from, Corner to) const {
  ensure();
  const FaceId start = g_.face_of(from), stop = g_.face_of(to);
  std::vector<FaceId> faces = dual_path(start, stop);
  std::vector<EdgeId> crossed = dual_path_edges(start, stop);
  std::vector<FaceCrossing> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    FaceCrossing fc;
    fc.face = faces[i];
    const auto& orbit = orbit_[faces[i]];
    const int len = static_cast<int>(orbit.size());
    if (len == 0) {
      out.push_back(fc);
      continue;
    }
    // Positions are doubled: corner j sits at 2j, the edge after it at 2j+1.
    auto edge_pos = [&](EdgeId e) {
      DartId d = 2 * e;
      if (g_.face_of_dart(d) != faces[i]) d = d + 1;
      return 2 * orbit_pos_[d] + 1;
    };
    const int entry = i == 0 ? 2 * orbit_pos_[from.dart] : edge_pos(crossed[i - 1]);
    const int exit = i + 1 == faces.size() ? 2 * orbit_pos_[to.dart] : edge_pos(crossed[i]);
    const int span = 2 * len;
    const int forward = ((exit - entry) % span + span) % span;
    for (int step = 1; step < span; ++step) {
      int p = (entry + step) % span;
      if (p % 2 != 0 || step == forward) continue;
      Corner c = g_.corner(orbit[p / 2]);
      (forward != 0 && step < forward ? fc.left : fc.right).push_back(c);
    }
    // Right side corners are listed nearest to the entry first.
    std::reverse(fc.right.begin(), fc.right.end());
    out.push_back(fc);
  }
  return out;
}

std::optional<FaceCrossing> TreeCotreeIndex::search_dual_path(Corner from, Corner to,
                                                              const std::vector<VertexId>& marks, SearchGoal goal,
                                                              PathSide side) const {
  std::vector<FaceCrossing> path = dual_crossings(from, to);
  if (goal == SearchGoal::Last) std::reverse(path.begin(), path.end());
  auto touches = [&](const std::vector<Corner>& corners, VertexId m) {
    return std::any_of(corners.begin(), corners.end(), [&](Corner c) { return c.vertex == m; });
  };
  for (const FaceCrossing& fc : path) {
    bool ok = true;
    for (VertexId m : marks) {
      bool l = touches(fc.left, m), r = touches(fc.right, m);
      bool hit = side == PathSide::Both ? (l && r) : side == PathSide::Left ? l : r;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) return fc;
  }
  return std::nullopt;
}

std::pair<std::vector<Corner>, std::vector<Corner>> TreeCotreeIndex::primal_sides(VertexId prev, VertexId w,
                                                                                  VertexId next) const {
  ensure();
  const DartId to_prev = dart_from_to(w, prev, g_.find_edge(w, prev));
  const DartId to_next = dart_from_to(w, next, g_.find_edge(w, next));
  std::vector<Corner> left, right;
  // Counterclockwise from the outgoing dart back to the incoming one is the left.
  for (DartId d = g_.rot_next(to_next);; d = g_.rot_next(d)) {
    left.push_back(g_.corner(d));
    if (d == to_prev) break;
  }
  for (DartId d = g_.rot_next(to_prev);; d = g_.rot_next(d)) {
    right.push_back(g_.corner(d));
    if (d == to_next) break;
  }
  return {left, right};
}

VertexId TreeCotreeIndex::search_primal_path(VertexId from, VertexId to, const std::vector<FaceId>& marks,
                                             SearchGoal goal, PathSide side) const {
  std::vector<VertexId> path = primal_path(from, to);
  const int k = static_cast<int>(path.size());
  std::vector<int> order;
  for (int i = 1; i + 1 < k; ++i) order.push_back(i);
  if (goal == SearchGoal::Last) std::reverse(order.begin(), order.end());
  for (int i : order) {
    auto [left, right] = primal_sides(path[i - 1], path[i], path[i + 1]);
    bool ok = true;
    for (FaceId m : marks) {
      auto has = [&](const std::vector<Corner>& cs) {
        return std::any_of(cs.begin(), cs.end(), [&](Corner c) { return g_.face_of(c) == m; });
      };
      bool l = has(left), r = has(right);
      bool hit = side == PathSide::Both ? (l && r) : side == PathSide::Left ? l : r;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) return path[i];
  }
  return kNone;
}

std::string TreeCotreeIndex::dump() const {
  ensure();
  std::ostringstream out;
  out << "T:";
  for (EdgeId e : primal_tree_edges()) {
    auto [a, b] = g_.endpoints(e);
    out << ' ' << a << '-' << b;
  }
  out << "\nT*:";
  for (FaceId f = 0; f < static_cast<FaceId>(fparent_.size()); ++f)
    if (fparent_[f] != kNone) out << ' ' << fparent_[f] << '-' << f << "/e" << fparent_edge_[f];
  out << '\n';
  return out.str();
}

}  // namespace dynplanar
