#include "dynplanar/flip_search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "dynplanar/blocks.hpp"

namespace dynplanar {

const char* flip_kind_name(FlipKind kind) {
  switch (kind) {
    case FlipKind::Articulation: return "articulation";
    case FlipKind::SR: return "SR";
    case FlipKind::P: return "P";
  }
  return "?";
}

CandidateStats& candidate_stats() {
  static CandidateStats stats;
  return stats;
}

SeparationFlip complement(const SeparationFlip& sigma) {
  const auto& c = sigma.sigma;
  return SeparationFlip{{c[3], c[2], c[1], c[0]}};
}

namespace {

DartId dart_at(const EmbeddedGraph& g, EdgeId e, VertexId w) { return g.origin(2 * e) == w ? 2 * e : 2 * e + 1; }

bool on_both(const EmbeddedGraph& g, VertexId w, FaceId a, FaceId b) {
  return g.vertex_on_face(w, a) && g.vertex_on_face(w, b);
}

void keep_larger(SepFlipResult& best, const SepFlipResult& other) {
  if (other.size > best.size) best = other;
}

std::optional<FlipRegion> try_analyze(const EmbeddedGraph& g, const SeparationFlip& sigma) {
  return g.try_analyze_separation(sigma);
}

// Number of separation classes among the given edges, with s and t as poles.
int count_classes(const EmbeddedGraph& g, const std::vector<EdgeId>& edges, VertexId s, VertexId t) {
  if (edges.empty()) return 0;
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = g.endpoints(edges[i]);
    for (VertexId w : {a, b}) {
      if (w == s || w == t) continue;
      if (owner[w] < 0) owner[w] = static_cast<int>(i);
      else parent[find(static_cast<int>(i))] = find(owner[w]);
    }
  }
  int classes = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) classes += find(static_cast<int>(i)) == static_cast<int>(i);
  return classes;
}

}  // namespace

SeparationClassification classify_separation(const EmbeddedGraph& g, const SeparationFlip& sigma) {
  const FlipRegion moved = g.analyze_separation(sigma);
  const FlipRegion rest = g.analyze_separation(complement(sigma));
  const VertexId s = moved.poles[0], t = moved.poles[1];
  const BlockDecomposition blocks = compute_blocks(g);
  const int block = blocks.common_block(s, t);
  SeparationClassification out;
  if (block < 0) return out;
  auto in_block = [&](const std::vector<EdgeId>& edges) {
    std::vector<EdgeId> kept;
    for (EdgeId e : edges)
      if (blocks.edge_block[e] == block) kept.push_back(e);
    return kept;
  };
  const std::vector<EdgeId> moved_in = in_block(moved.edges), rest_in = in_block(rest.edges);
  const int a = count_classes(g, moved_in, s, t);
  const int b = count_classes(g, rest_in, s, t);
  const bool lone_edge_class = (a == 1 && moved_in.size() == 1) || (b == 1 && rest_in.size() == 1);
  const bool separation_pair = a + b >= 2 && !(a + b == 2 && lone_edge_class) &&
                               !(a + b == 3 && moved_in.size() + rest_in.size() == 3);
  if (a == 0 || b == 0 || !separation_pair) {
    // The poles do not separate their block, so only parts hanging off the
    // poles move: an articulation flip in disguise.
    out.kind = FlipKind::Articulation;
    out.clean = true;
    return out;
  }
  out.kind = a >= 2 && b >= 2 ? FlipKind::P : FlipKind::SR;
  auto ends_in_block = [&](const std::vector<DartId>& arc) {
    return arc.empty() || (blocks.edge_block[EmbeddedGraph::edge_of(arc.front())] == block &&
                           blocks.edge_block[EmbeddedGraph::edge_of(arc.back())] == block);
  };
  out.clean = ends_in_block(moved.arc_first) && ends_in_block(moved.arc_second);
  return out;
}

std::vector<SepFlipResult> enumerate_u_flips(const EmbeddedGraph& g, VertexId u, VertexId v) {
  std::vector<SepFlipResult> out;
  std::set<std::vector<EdgeId>> seen;
  for (FaceId fu : g.faces_at(u)) {
    std::vector<VertexId> on_fu;
    for (Corner c : g.face_corners(fu))
      if (c.vertex != u && c.vertex != v) on_fu.push_back(c.vertex);
    std::sort(on_fu.begin(), on_fu.end());
    on_fu.erase(std::unique(on_fu.begin(), on_fu.end()), on_fu.end());
    for (std::size_t i = 0; i < on_fu.size(); ++i) {
      for (std::size_t j = 0; j < on_fu.size(); ++j) {
        if (i == j) continue;
        const VertexId s = on_fu[i], t = on_fu[j];
        for (FaceId fv : g.faces_at(s)) {
          if (fv == fu || !g.vertex_on_face(t, fv)) continue;
          for (Corner su : g.corners_between(s, fu))
            for (Corner tu : g.corners_between(t, fu))
              for (Corner tv : g.corners_between(t, fv))
                for (Corner sv : g.corners_between(s, fv)) {
                  SeparationFlip sigma{{su, tu, tv, sv}};
                  auto region = try_analyze(g, sigma);
                  if (!region || !region->contains_strictly(u)) continue;
                  auto other = try_analyze(g, complement(sigma));
                  if (!other || !other->contains_strictly(v)) continue;
                  if (!seen.insert(region->edges).second) continue;
                  out.push_back({region->size(), sigma});
                }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size > b.size; });
  return out;
}

// Keeps track of which (u,v) pair criticality is measured against: the
// outermost public call wins.
class FlipSearch::PairScope {
 public:
  PairScope(FlipSearch& fs, VertexId u, VertexId v) : fs_(fs) {
    if (fs_.depth_++ == 0) {
      fs_.pair_u_ = u;
      fs_.pair_v_ = v;
      fs_.flips_this_call_ = 0;
    }
  }
  ~PairScope() {
    if (--fs_.depth_ == 0) fs_.pair_u_ = fs_.pair_v_ = kNone;
  }

 private:
  FlipSearch& fs_;
};

FlipSearch::FlipSearch(EmbeddedGraph& g, TreeCotreeIndex& index) : g_(g), index_(index) {}

void FlipSearch::record(FlipRecord rec) {
  log_.push_back(std::move(rec));
  ++flips_this_call_;
  if (budget_ > 0 && flips_this_call_ > budget_)
    throw Error(ErrorCode::FlipBudgetExceeded, "more than " + std::to_string(budget_) + " flips in one operation");
}

std::pair<FlipRegion, FlipRegion> FlipSearch::sides(const SeparationFlip& sigma) const {
  return {g_.analyze_separation(sigma), g_.analyze_separation(complement(sigma))};
}

// ---------------------------------------------------------------------------
// Block sweep

bool FlipSearch::multi_flip_linkable(VertexId u, VertexId v) {
  PairScope scope(*this, u, v);
  if (index_.linkable(u, v)) return true;
  VertexId u1 = u;
  // Each round either flips or advances along the block path; the bound only
  // trips on a bug.
  const int round_limit = 4 * (g_.vertex_count() + g_.edge_count()) + 8;
  for (int round = 0; u1 != v; ++round) {
    if (round > round_limit) throw std::logic_error("block sweep failed to advance");
    const BlockDecomposition blocks = compute_blocks(g_);
    const VertexId v1 = blocks.same_block(u1, v) ? v : blocks.cut_vertices_between(u1, v).front();
    if (!do_separation_flips(u1, v1)) return false;
    do_articulation_flips(u, u1, v1, v);
    u1 = find_next_flip_block(u, u1, v1, v);
  }
  if (!index_.linkable(u, v)) throw std::logic_error("block sweep finished without a shared face");
  return true;
}

BoundingFace FlipSearch::find_bounding_face(VertexId u, VertexId a, VertexId v) const {
  const Corner cu = g_.corners_at(u).front(), cv = g_.corners_at(v).front();
  auto hit = index_.search_dual_path(cu, cv, {a}, SearchGoal::First, PathSide::Both);
  if (!hit) throw Error(ErrorCode::NoSuchFace, "no face on the dual path touches the vertex on both sides");
  auto first_at = [&](const std::vector<Corner>& cs) {
    for (Corner c : cs)
      if (c.vertex == a) return c;
    throw Error(ErrorCode::NoSuchFace, "missing corner");
  };
  return {hit->face, first_at(hit->left), first_at(hit->right)};
}

VertexId FlipSearch::find_next_flip_block(VertexId u, VertexId u1, VertexId v1, VertexId v) const {
  (void)u1;
  if (v1 != v) {
    const BoundingFace fu = find_bounding_face(u, v1, v);
    const BoundingFace fv = find_bounding_face(v, v1, u);
    if (fu.face == fv.face) {
      if (g_.vertex_on_face(v, fu.face)) return v;
      const VertexId last = index_.search_primal_path(u, v, {fu.face}, SearchGoal::Last, PathSide::Both);
      if (last != kNone) return last;
    }
  }
  return v1;
}

void FlipSearch::move_articulation_side(VertexId a, Corner c1, Corner c2, VertexId toward,
                                        const std::vector<Corner>& targets) {
  // The two arcs of a's rotation split at the bounding corners.
  auto arc_from = [&](DartId first, DartId stop) {
    std::vector<DartId> arc;
    for (DartId d = first; d != stop; d = g_.rot_next(d)) arc.push_back(d);
    return arc;
  };
  std::vector<DartId> arcs[2] = {arc_from(c1.dart, c2.dart), arc_from(c2.dart, c1.dart)};
  std::vector<char> reach(g_.vertex_count(), 0);
  std::deque<VertexId> queue{toward};
  reach[toward] = 1;
  reach[a] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId w : g_.neighbors(x))
      if (!reach[w]) {
        reach[w] = 1;
        queue.push_back(w);
      }
  }
  int pick = -1;
  for (int i = 0; i < 2 && pick < 0; ++i)
    for (DartId d : arcs[i])
      if (g_.head(d) == toward || (g_.head(d) != a && reach[g_.head(d)])) {
        pick = i;
        break;
      }
  if (pick < 0) throw std::logic_error("articulation side not found");
  const std::vector<DartId>& seg = arcs[pick];
  std::vector<char> in_seg(g_.dart_capacity(), 0);
  for (DartId d : seg) in_seg[d] = 1;
  Corner target;
  for (Corner c : targets)
    if (!c.is_null() && g_.origin(c.dart) == a && !in_seg[c.dart]) {
      target = c;
      break;
    }
  if (target.is_null()) throw std::logic_error("no target corner for articulation flip");
  ArticulationFlip flip{g_.corner(seg.front()), g_.corner(seg.back()), target, false};
  const FlipRegion region = g_.analyze_articulation(flip);
  FlipRecord rec;
  rec.flip = flip;
  rec.kind = FlipKind::Articulation;
  rec.clean = true;
  rec.moved_size = region.size();
  rec.critical = region.contains_strictly(pair_u_) != region.contains_strictly(pair_v_);
  g_.articulation_flip(flip);
  record(std::move(rec));
}

std::vector<Corner> FlipSearch::corners_toward(VertexId a, VertexId other, Corner preferred) const {
  std::vector<Corner> out{preferred};
  for (FaceId f : g_.faces_at(other))
    for (Corner c : g_.corners_between(a, f)) out.push_back(c);
  return out;
}

void FlipSearch::do_articulation_flips(VertexId u, VertexId u1, VertexId v1, VertexId v) {
  PairScope scope(*this, u, v);
  auto shared = [&]() {
    auto link = index_.linkable(u1, v1);
    return link ? *link : std::make_pair(Corner{}, Corner{});
  };
  if (u == u1) {
    if (v1 == v) return;
    const BoundingFace fv = find_bounding_face(v, v1, u);
    if (!g_.vertex_on_face(u1, fv.face))
      move_articulation_side(v1, fv.left, fv.right, v, corners_toward(v1, u1, shared().second));
    return;
  }
  if (v1 == v) {
    const BoundingFace fu = find_bounding_face(u, u1, v);
    if (!g_.vertex_on_face(v1, fu.face))
      move_articulation_side(u1, fu.left, fu.right, u, corners_toward(u1, v1, shared().first));
    return;
  }
  const BoundingFace fv = find_bounding_face(v, v1, u);
  const BoundingFace fu = find_bounding_face(u, u1, v);
  if (fu.face == fv.face) return;
  if (g_.vertex_on_face(u1, fv.face)) {
    move_articulation_side(u1, fu.left, fu.right, u, g_.corners_between(u1, fv.face));
  } else if (g_.vertex_on_face(v1, fu.face)) {
    move_articulation_side(v1, fv.left, fv.right, v, g_.corners_between(v1, fu.face));
  } else {
    const auto [cu, cv] = shared();
    const auto u_targets = corners_toward(u1, v1, cu);
    const auto v_targets = corners_toward(v1, u1, cv);
    move_articulation_side(u1, fu.left, fu.right, u, u_targets);
    move_articulation_side(v1, fv.left, fv.right, v, v_targets);
  }
}

// ---------------------------------------------------------------------------
// Separation flips inside one block

void FlipSearch::execute_separation(const SeparationFlip& sigma, VertexId u) {
  SeparationFlip oriented = sigma;
  auto [moved, rest] = sides(sigma);
  if (!moved.contains_strictly(u)) {
    oriented = complement(sigma);
    std::swap(moved, rest);
  }
  const SeparationClassification cls = classify_separation(g_, oriented);
  FlipRecord rec;
  rec.flip = oriented;
  rec.kind = cls.kind;
  rec.clean = cls.clean;
  rec.moved_size = moved.size();
  rec.critical = moved.contains_strictly(pair_u_) != moved.contains_strictly(pair_v_);
  g_.separation_flip(oriented);
  record(std::move(rec));
}

bool FlipSearch::do_separation_flips(VertexId u, VertexId v) {
  PairScope scope(*this, u, v);
  std::size_t size = 0;
  while (!index_.linkable(u, v)) {
    const SepFlipResult next = find_first_separation_flip(u, v);
    if (next.size <= size) return false;
    execute_separation(*next.sigma, u);
    size = next.size;
  }
  return true;
}

std::vector<CandidateTuple> FlipSearch::find_single_flip_candidates(VertexId u, VertexId v) const {
  const auto path = index_.primal_path_edges(u, v);
  const EdgeId e_u = path.front(), e_v = path.back();
  const DartId du = dart_at(g_, e_u, u), dv = dart_at(g_, e_v, v);
  const FaceId uR = g_.face_of_dart(du), uL = g_.face_of_dart(g_.twin(du));
  const FaceId vR = g_.face_of_dart(dv), vL = g_.face_of_dart(g_.twin(dv));
  const FaceId fuL = index_.meet(TreeKind::Dual, uL, uR, vL), fuR = index_.meet(TreeKind::Dual, uL, uR, vR);
  const FaceId fvL = index_.meet(TreeKind::Dual, vL, vR, uL);

  std::vector<CandidateTuple> out;
  std::set<std::tuple<FaceId, FaceId, EdgeId, EdgeId, EdgeId>> seen;
  auto add = [&](FaceId a, FaceId b, const CycleHandle& c, EdgeId x, EdgeId y) {
    if (seen.emplace(a, b, c.closing_edge, x, y).second) out.push_back({a, b, c, x, y});
  };
  auto cycle_from = [&](FaceId a, FaceId b) { return index_.fundamental_cycle(index_.dual_path_edges(a, b).front()); };
  auto distinct = [](FaceId a, FaceId b, FaceId drop) {
    std::vector<FaceId> fs;
    for (FaceId f : {a, b})
      if (f != drop && std::find(fs.begin(), fs.end(), f) == fs.end()) fs.push_back(f);
    return fs;
  };

  if (fuL != fuR) {
    // A fundamental cycle runs through both u and v.
    const CycleHandle c = cycle_from(fuL, fuR);
    const auto [eu1, eu2] = index_.cycle_edges_at(c, index_.projection(c, u));
    const auto [ev1, ev2] = index_.cycle_edges_at(c, index_.projection(c, v));
    for (FaceId f : {uL, uR}) {
      const int near = index_.side_of(c, f), far = 1 - near;
      auto on = [&](EdgeId e, int side) { return index_.face_on_side(c, e, side); };
      add(index_.meet(TreeKind::Dual, on(eu1, near), on(eu2, near), on(ev1, near)),
          index_.meet(TreeKind::Dual, on(ev1, far), on(ev2, far), on(eu1, far)), c, e_u, e_v);
    }
  } else {
    const FaceId fu_star = fuL, fv_star = fvL;
    // Separating cycle through u only.
    for (FaceId f : distinct(uL, uR, fu_star)) {
      const CycleHandle c = cycle_from(fu_star, f);
      const auto [eu1, eu2] = index_.cycle_edges_at(c, index_.projection(c, u));
      const auto [ev1, ev2] = index_.cycle_edges_at(c, index_.projection(c, v));
      for (EdgeId ev : {ev1, ev2})
        for (FaceId fv : {g_.face_of_dart(2 * ev), g_.face_of_dart(2 * ev + 1)}) {
          const int side = index_.side_of(c, fv);
          add(index_.meet(TreeKind::Dual, index_.face_on_side(c, eu1, side), index_.face_on_side(c, eu2, side), fv),
              fv_star, c, e_u, ev);
        }
    }
    // Separating cycle through v only.
    for (FaceId f : distinct(vL, vR, fv_star)) {
      const CycleHandle c = cycle_from(fv_star, f);
      const auto [eu1, eu2] = index_.cycle_edges_at(c, index_.projection(c, u));
      const auto [ev1, ev2] = index_.cycle_edges_at(c, index_.projection(c, v));
      for (EdgeId eu : {eu1, eu2})
        for (FaceId fu : {g_.face_of_dart(2 * eu), g_.face_of_dart(2 * eu + 1)}) {
          const int side = index_.side_of(c, fu);
          add(fu_star,
              index_.meet(TreeKind::Dual, index_.face_on_side(c, ev1, side), index_.face_on_side(c, ev2, side), fu),
              c, eu, e_v);
        }
    }
    // Neither endpoint lies on a separating fundamental cycle.
    if (fu_star != fv_star) {
      const CycleHandle c = cycle_from(fu_star, fv_star);
      const auto [eu1, eu2] = index_.cycle_edges_at(c, index_.projection(c, u));
      const auto [ev1, ev2] = index_.cycle_edges_at(c, index_.projection(c, v));
      for (EdgeId eu : {eu1, eu2})
        for (EdgeId ev : {ev1, ev2}) add(fu_star, fv_star, c, eu, ev);
    }
  }
  CandidateStats& stats = candidate_stats();
  ++stats.calls;
  stats.largest = std::max(stats.largest, out.size());
  if (out.size() > kMaxCandidates) throw std::logic_error("more than twenty candidate tuples");
  return out;
}

bool FlipSearch::is_locally_maximal(const SeparationFlip& sigma, VertexId u, VertexId v) const {
  auto first = try_analyze(g_, sigma);
  auto second = try_analyze(g_, complement(sigma));
  if (!first || !second) return false;
  const VertexId s = first->poles[0], t = first->poles[1];
  if (u == s || u == t || v == s || v == t) return false;
  const FaceId fu = g_.face_of(sigma.sigma[0]), fv = g_.face_of(sigma.sigma[3]);
  if (!g_.vertex_on_face(u, fu)) return false;
  FlipRegion hu = std::move(*first), hv = std::move(*second);
  if (!hu.contains_strictly(u)) std::swap(hu, hv);
  if (!hu.contains_strictly(u) || !hv.contains_strictly(v)) return false;

  // Another vertex on the H_v stretch of C touching both faces would give a
  // larger component with the same faces.
  const CycleHandle c = index_.fundamental_cycle(index_.dual_path_edges(fu, fv).front());
  const int is = c.index_of(s), it = c.index_of(t);
  if (is < 0 || it < 0) return false;
  const int k = static_cast<int>(c.vertices.size());
  std::vector<char> hv_edge(g_.edge_capacity(), 0);
  for (EdgeId e : hv.edges) hv_edge[e] = 1;
  for (int dir : {1, -1}) {
    const int first_edge = dir == 1 ? is : (is + k - 1) % k;
    if (!hv_edge[c.edges[first_edge]]) continue;
    for (int i = (is + dir + k) % k; i != it; i = (i + dir + k) % k)
      if (on_both(g_, c.vertices[i], fu, fv)) return false;
  }

  // Walk the dual cycle of the first tree edge on s..t from f_v into H_v;
  // the first face touching both poles bounds a chunk of H_v, and if that
  // chunk misses v it could join H_u.
  const DualCycle dc = index_.dual_fundamental_cycle(index_.path_end_edge(TreeKind::Primal, s, t, PathEnd::First));
  const int m = static_cast<int>(dc.faces.size());
  const auto at = std::find(dc.faces.begin(), dc.faces.end(), fv);
  if (at == dc.faces.end()) return true;
  const int jv = static_cast<int>(at - dc.faces.begin());
  for (int dir : {1, -1}) {
    const EdgeId crossing = dir == 1 ? dc.crossed[jv] : dc.crossed[(jv + m - 1) % m];
    if (!hv_edge[crossing]) continue;
    FaceId further = kNone;
    for (int j = (jv + dir + m) % m; j != jv; j = (j + dir + m) % m) {
      const FaceId f = dc.faces[j];
      if (f == fu) break;
      if (f != fv && g_.vertex_on_face(s, f) && g_.vertex_on_face(t, f)) {
        further = f;
        break;
      }
    }
    if (further == kNone) continue;
    for (Corner ct : g_.corners_between(t, further))
      for (Corner cs : g_.corners_between(s, further)) {
        const SeparationFlip wider{{sigma.sigma[0], sigma.sigma[1], ct, cs}};
        for (const SeparationFlip& cand : {wider, complement(wider)}) {
          auto region = try_analyze(g_, cand);
          auto other = try_analyze(g_, complement(cand));
          if (region && other && region->contains_strictly(u) && other->contains_strictly(v) &&
              region->size() > hu.size())
            return false;
        }
      }
  }
  return true;
}

SepFlipResult FlipSearch::choose_best_flip(VertexId u, VertexId v, FaceId fu, FaceId fv) const {
  if (fu == kNone || fv == kNone || fu == fv) return {};
  if (!g_.vertex_on_face(u, fu) || g_.vertex_on_face(u, fv)) return {};
  if (best_cache_version_ != g_.version()) {
    best_cache_.clear();
    best_cache_version_ = g_.version();
  }
  const std::array<std::int32_t, 4> key{u, v, fu, fv};
  if (auto hit = best_cache_.find(key); hit != best_cache_.end()) return hit->second;
  SepFlipResult result = choose_best_uncached(u, v, fu, fv);
  best_cache_.emplace(key, result);
  return result;
}

SepFlipResult FlipSearch::choose_best_uncached(VertexId u, VertexId v, FaceId fu, FaceId fv) const {
  const CycleHandle c = index_.fundamental_cycle(index_.dual_path_edges(fu, fv).front());
  if (std::none_of(c.vertices.begin(), c.vertices.end(), [&](VertexId w) { return on_both(g_, w, fu, fv); }))
    return {};
  const int k = static_cast<int>(c.vertices.size());
  const int iv = c.index_of(index_.projection(c, v));
  for (int a : {(iv + k - 1) % k, iv}) {
    const int b = (a + 1) % k;
    // Nearest vertices on both faces walking away from the edge (a, b).
    int ix = -1, iy = -1;
    for (int step = 0, i = a; step < k; ++step, i = (i + k - 1) % k)
      if (on_both(g_, c.vertices[i], fu, fv)) {
        ix = i;
        break;
      }
    for (int step = 0, i = b; step < k; ++step, i = (i + 1) % k)
      if (on_both(g_, c.vertices[i], fu, fv)) {
        iy = i;
        break;
      }
    if (ix < 0 || iy < 0 || ix == iy) continue;
    // At each pole: corners of f_u and f_v closest to the edge, one on each side of C.
    auto nearest = [&](int i, DartId toward, DartId away) -> std::optional<std::pair<Corner, Corner>> {
      (void)i;
      std::vector<Corner> ccw, cw;
      for (DartId d = g_.rot_next(toward);; d = g_.rot_next(d)) {
        ccw.push_back(g_.corner(d));
        if (d == away) break;
      }
      for (DartId d = toward;; d = g_.rot_prev(d)) {
        cw.push_back(g_.corner(d));
        if (g_.rot_prev(d) == away) break;
      }
      auto pick = [&](const std::vector<Corner>& cs, FaceId f) -> std::optional<Corner> {
        for (Corner c2 : cs)
          if (g_.face_of(c2) == f) return c2;
        return std::nullopt;
      };
      auto u_ccw = pick(ccw, fu), v_cw = pick(cw, fv);
      if (u_ccw && v_cw) return std::make_pair(*u_ccw, *v_cw);
      auto u_cw = pick(cw, fu), v_ccw = pick(ccw, fv);
      if (u_cw && v_ccw) return std::make_pair(*u_cw, *v_ccw);
      return std::nullopt;
    };
    const VertexId sx = c.vertices[ix], sy = c.vertices[iy];
    const auto at_x = nearest(ix, dart_at(g_, c.edges[ix], sx), dart_at(g_, c.edges[(ix + k - 1) % k], sx));
    const auto at_y = nearest(iy, dart_at(g_, c.edges[(iy + k - 1) % k], sy), dart_at(g_, c.edges[iy], sy));
    if (!at_x || !at_y) continue;
    const SeparationFlip sigma{{at_x->first, at_y->first, at_y->second, at_x->second}};
    if (!is_locally_maximal(sigma, u, v)) continue;
    auto region = g_.analyze_separation(sigma);
    if (!region.contains_strictly(u)) region = g_.analyze_separation(complement(sigma));
    return {region.size(), sigma};
  }
  return {};
}

namespace {

// Faces of e on the same side as ref of every listed cycle that contains e;
// falls back to the first cycle alone, then to both faces.
std::vector<FaceId> faces_beside(const EmbeddedGraph& g, const TreeCotreeIndex& index, EdgeId e, FaceId ref,
                                 const std::vector<const CycleHandle*>& cycles) {
  const FaceId pair[2] = {g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1)};
  auto agrees = [&](FaceId f, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (index.side_of(*cycles[i], f) != index.side_of(*cycles[i], ref)) return false;
    return true;
  };
  for (std::size_t upto : {cycles.size(), std::size_t{1}}) {
    std::vector<FaceId> out;
    for (FaceId f : pair)
      if (agrees(f, upto) && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    if (!out.empty()) return out;
  }
  return pair[0] == pair[1] ? std::vector<FaceId>{pair[0]} : std::vector<FaceId>{pair[0], pair[1]};
}

// Cycle edges at w, filtered by membership in another cycle.
enum class Membership { Any, Inside, Outside };
std::vector<EdgeId> cycle_edges_filtered(const TreeCotreeIndex& index, const CycleHandle& c, VertexId w,
                                         const CycleHandle* other, Membership m) {
  std::vector<EdgeId> out;
  if (c.index_of(w) < 0) return out;
  auto [a, b] = index.cycle_edges_at(c, w);
  for (EdgeId e : {a, b}) {
    if (!out.empty() && out.back() == e) continue;
    if (m == Membership::Inside && !other->contains_edge(e)) continue;
    if (m == Membership::Outside && other->contains_edge(e)) continue;
    out.push_back(e);
  }
  return out;
}

FaceId face_opposite(const TreeCotreeIndex& index, const CycleHandle& c, EdgeId e, FaceId ref) {
  if (e == kNone) return kNone;
  return index.face_on_side(c, e, 1 - index.side_of(c, ref));
}

}  // namespace

SepFlipResult FlipSearch::find_sep_case(SepCase tag, VertexId u, VertexId v, FaceId fu, const CycleHandle& c,
                                        EdgeId e_u, EdgeId e_v, VertexId x, VertexId y) const {
  const VertexId px = index_.projection(c, x), py = index_.projection(c, y);
  if (px == py && (tag == SepCase::P11 || tag == SepCase::P10 || tag == SepCase::P0x || tag == SepCase::R11))
    return {};
  const FaceId fu_bar = face_opposite(index_, c, e_u, fu);
  const FaceId fv_bar = face_opposite(index_, c, e_v, fu);
  const FaceId fv_near = e_v == kNone ? kNone : index_.face_on_side(c, e_v, index_.side_of(c, fu));
  auto first_on_path_touching = [&](FaceId from, FaceId to) -> FaceId {
    if (from == kNone || to == kNone) return kNone;
    for (FaceId f : index_.dual_path(from, to))
      if (g_.vertex_on_face(px, f) && g_.vertex_on_face(py, f)) return f;
    return kNone;
  };
  auto best_over = [&](FaceId ref, const std::vector<EdgeId>& ex, const std::vector<EdgeId>& ey,
                       const std::vector<const CycleHandle*>& cycles) {
    SepFlipResult best;
    if (ref == kNone) return best;
    std::vector<FaceId> fx, fy;
    for (EdgeId e : ex)
      for (FaceId f : faces_beside(g_, index_, e, ref, cycles)) fx.push_back(f);
    for (EdgeId e : ey)
      for (FaceId f : faces_beside(g_, index_, e, ref, cycles)) fy.push_back(f);
    for (FaceId a : fx)
      for (FaceId b : fy) keep_larger(best, choose_best_flip(u, v, fu, index_.meet(TreeKind::Dual, ref, a, b)));
    return best;
  };
  auto concat = [](std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  switch (tag) {
    case SepCase::P11:
      return choose_best_flip(u, v, fu, first_on_path_touching(fv_bar, fu_bar));
    case SepCase::P10:
      return choose_best_flip(u, v, fu, first_on_path_touching(fv_near, fu));
    case SepCase::R11: {
      auto ex = cycle_edges_filtered(index_, c, px, nullptr, Membership::Any);
      auto ey = cycle_edges_filtered(index_, c, py, nullptr, Membership::Any);
      return best_over(fu_bar, ex, ey, {&c});
    }
    case SepCase::R10: {
      const CycleHandle c2 = index_.fundamental_cycle(g_.find_edge(x, y));
      if (px != py) {
        const Membership second = c2.contains_edge(e_u) ? Membership::Outside : Membership::Inside;
        auto ex = concat(cycle_edges_filtered(index_, c2, px, &c, Membership::Outside),
                         cycle_edges_filtered(index_, c, px, &c2, second));
        auto ey = concat(cycle_edges_filtered(index_, c2, py, &c, Membership::Outside),
                         cycle_edges_filtered(index_, c, py, &c2, second));
        return best_over(fv_near, ex, ey, {&c, &c2});
      }
      auto eu = cycle_edges_filtered(index_, c2, index_.projection(c2, v), nullptr, Membership::Any);
      auto ev = cycle_edges_filtered(index_, c, index_.projection(c, u), nullptr, Membership::Any);
      return best_over(fv_near, eu, ev, {&c, &c2});
    }
    case SepCase::P0x: {
      if (fu_bar == kNone) return {};
      const CycleHandle c2 = index_.fundamental_cycle(g_.find_edge(x, y));
      const auto near = faces_beside(g_, index_, g_.find_edge(x, y), fu_bar, {&c2});
      return choose_best_flip(u, v, fu, first_on_path_touching(near.front(), fu_bar));
    }
    case SepCase::R01: {
      const CycleHandle c2 = index_.fundamental_cycle(g_.find_edge(x, y));
      if (px != py) {
        const Membership first = c2.contains_edge(e_v) ? Membership::Outside : Membership::Inside;
        auto ex = concat(cycle_edges_filtered(index_, c, px, &c2, first),
                         cycle_edges_filtered(index_, c2, px, &c, Membership::Outside));
        auto ey = concat(cycle_edges_filtered(index_, c, py, &c2, first),
                         cycle_edges_filtered(index_, c2, py, &c, Membership::Outside));
        return best_over(fu_bar, ex, ey, {&c, &c2});
      }
      auto eu = cycle_edges_filtered(index_, c, index_.projection(c, v), nullptr, Membership::Any);
      auto ev = cycle_edges_filtered(index_, c2, index_.projection(c2, u), nullptr, Membership::Any);
      return best_over(fu_bar, eu, ev, {&c, &c2});
    }
  }
  return {};
}

SepFlipResult FlipSearch::find_first_separation_flip(VertexId u, VertexId v) const {
  const std::vector<CandidateTuple> candidates = find_single_flip_candidates(u, v);
  for (const CandidateTuple& cand : candidates) {
    if (!g_.vertex_on_face(v, cand.f_v)) continue;
    SepFlipResult r = choose_best_flip(u, v, cand.f_u, cand.f_v);
    if (r.size > 0) return r;
  }
  SepFlipResult result;
  const FaceId any_v_face = g_.face_of(g_.corners_at(v).front());
  for (const CandidateTuple& cand : candidates) {
    const CycleHandle& c = cand.cycle;
    const FaceId fu = cand.f_u;
    const int near = index_.side_of(c, fu);
    // Cases where the cycle reaches past the first blocking node.
    const FaceId fv_near = cand.e_v == kNone ? kNone : index_.face_on_side(c, cand.e_v, near);
    if (fv_near != kNone && fv_near != fu) {
      auto [x, y] = g_.endpoints(index_.dual_path_edges(fu, fv_near).front());
      for (SepCase tag : {SepCase::P11, SepCase::R11, SepCase::P10, SepCase::R10})
        keep_larger(result, find_sep_case(tag, u, v, fu, c, cand.e_u, cand.e_v, x, y));
    }
    // Cases where it does not.
    const auto [ev1, ev2] = index_.cycle_edges_at(c, index_.projection(c, v));
    const FaceId bar1 = index_.face_on_side(c, ev1, 1 - near), bar2 = index_.face_on_side(c, ev2, 1 - near);
    if (bar1 == kNone || bar2 == kNone) continue;
    const FaceId f1 = index_.meet(TreeKind::Dual, bar1, bar2, any_v_face);
    keep_larger(result, choose_best_flip(u, v, fu, f1));
    std::vector<FaceId> seconds;
    for (FaceId f : {bar1, bar2})
      if (f != f1 && std::find(seconds.begin(), seconds.end(), f) == seconds.end()) seconds.push_back(f);
    for (FaceId f2 : seconds) {
      auto [x, y] = g_.endpoints(index_.dual_path_edges(f1, f2).front());
      for (SepCase tag : {SepCase::P0x, SepCase::R01})
        keep_larger(result, find_sep_case(tag, u, v, fu, c, cand.e_u, cand.e_v, x, y));
    }
  }
  return result;
}

}  // namespace dynplanar
