#include "dynplanar/embedded_graph.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

namespace dynplanar {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SameFaceViolation: return "SameFaceViolation";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidSegment: return "InvalidSegment";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::NotAFourCycle: return "NotAFourCycle";
    case ErrorCode::NonContiguousCut: return "NonContiguousCut";
    case ErrorCode::DifferentComponents: return "DifferentComponents";
    case ErrorCode::SameNode: return "SameNode";
    case ErrorCode::TreeEdge: return "TreeEdge";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::NoSuchFace: return "NoSuchFace";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyComponent: return "EmptyComponent";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotSameBlock: return "NotSameBlock";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfiniteCost: return "InfiniteCost";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FlipBudgetExceeded: return "FlipBudgetExceeded";
  }
  return "Unknown";
}

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

bool FlipRegion::contains_strictly(VertexId v) const {
  return std::binary_search(interior.begin(), interior.end(), v);
}

EmbeddedGraph::EmbeddedGraph(int vertex_count) : first_dart_(static_cast<std::size_t>(vertex_count), kNone) {}

bool EmbeddedGraph::edge_alive(EdgeId e) const {
  return e >= 0 && e < edge_capacity() && origin_[2 * e] != kNone;
}

int EmbeddedGraph::degree(VertexId v) const {
  DartId f = first_dart_[v];
  if (f == kNone) return 0;
  int k = 0;
  DartId d = f;
  do {
    ++k;
    d = next_[d];
  } while (d != f);
  return k;
}

std::vector<DartId> EmbeddedGraph::darts_at(VertexId v) const {
  std::vector<DartId> out;
  DartId f = first_dart_[v];
  if (f == kNone) return out;
  DartId d = f;
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != f);
  return out;
}

std::vector<VertexId> EmbeddedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (DartId d : darts_at(v)) out.push_back(head(d));
  return out;
}

std::vector<EdgeId> EmbeddedGraph::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_capacity(); ++e)
    if (edge_alive(e)) out.push_back(e);
  return out;
}

std::pair<VertexId, VertexId> EmbeddedGraph::endpoints(EdgeId e) const {
  if (!edge_alive(e)) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
  return {origin_[2 * e], origin_[2 * e + 1]};
}

EdgeId EmbeddedGraph::find_edge(VertexId u, VertexId v) const {
  auto it = adjacency_.find(pair_key(u, v));
  if (it == adjacency_.end() || it->second.empty()) return kNone;
  return it->second.front();
}

std::vector<Corner> EmbeddedGraph::corners_at(VertexId v) const {
  std::vector<Corner> out;
  for (DartId d : darts_at(v)) out.push_back(corner(d));
  if (out.empty()) out.push_back(null_corner(v));
  return out;
}

void EmbeddedGraph::ensure_faces() const {
  if (faces_version_ == version_) return;
  dart_face_.assign(origin_.size(), kNone);
  isolated_face_.assign(first_dart_.size(), kNone);
  face_rep_.clear();
  for (DartId d = 0; d < dart_capacity(); ++d) {
    if (origin_[d] == kNone || dart_face_[d] != kNone) continue;
    FaceId f = static_cast<FaceId>(face_rep_.size());
    face_rep_.push_back(corner(d));
    DartId x = d;
    do {
      dart_face_[x] = f;
      x = face_next(x);
    } while (x != d);
  }
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (first_dart_[v] != kNone) continue;
    isolated_face_[v] = static_cast<FaceId>(face_rep_.size());
    face_rep_.push_back(null_corner(v));
  }
  faces_version_ = version_;
}

int EmbeddedGraph::face_count() const {
  ensure_faces();
  return static_cast<int>(face_rep_.size());
}

FaceId EmbeddedGraph::face_of(Corner c) const {
  ensure_faces();
  if (c.is_null()) {
    if (c.vertex < 0 || c.vertex >= vertex_count() || isolated_face_[c.vertex] == kNone)
      throw Error(ErrorCode::InvalidTarget, "null corner at non-isolated vertex");
    return isolated_face_[c.vertex];
  }
  return dart_face_[c.dart];
}

FaceId EmbeddedGraph::face_of_dart(DartId d) const {
  ensure_faces();
  return dart_face_[d];
}

std::vector<Corner> EmbeddedGraph::face_walk(Corner c) const {
  if (c.is_null()) return {c};
  std::vector<Corner> out;
  DartId d = c.dart;
  do {
    out.push_back(corner(d));
    d = face_next(d);
  } while (d != c.dart);
  return out;
}

std::vector<Corner> EmbeddedGraph::face_corners(FaceId f) const {
  return face_walk(face_representative(f));
}

Corner EmbeddedGraph::face_representative(FaceId f) const {
  ensure_faces();
  return face_rep_.at(static_cast<std::size_t>(f));
}

bool EmbeddedGraph::vertex_on_face(VertexId v, FaceId f) const {
  ensure_faces();
  if (first_dart_[v] == kNone) return isolated_face_[v] == f;
  const DartId first = first_dart_[v];
  DartId d = first;
  do {
    if (dart_face_[d] == f) return true;
    d = next_[d];
  } while (d != first);
  return false;
}

std::vector<Corner> EmbeddedGraph::corners_between(VertexId v, FaceId f) const {
  std::vector<Corner> out;
  for (Corner c : corners_at(v))
    if (face_of(c) == f) out.push_back(c);
  return out;
}

std::vector<FaceId> EmbeddedGraph::faces_at(VertexId v) const {
  std::vector<FaceId> out;
  for (Corner c : corners_at(v)) {
    FaceId f = face_of(c);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

void EmbeddedGraph::ensure_components() const {
  if (comps_version_ == version_) return;
  component_.assign(first_dart_.size(), -1);
  component_count_ = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (component_[s] != -1) continue;
    int id = component_count_++;
    component_[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (DartId d : darts_at(x)) {
        VertexId y = head(d);
        if (component_[y] == -1) {
          component_[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  comps_version_ = version_;
}

int EmbeddedGraph::component_of(VertexId v) const {
  ensure_components();
  return component_[v];
}

int EmbeddedGraph::component_count() const {
  ensure_components();
  return component_count_;
}

void EmbeddedGraph::splice_before(DartId d, DartId anchor) {
  if (anchor == kNone) {
    first_dart_[origin_[d]] = d;
    next_[d] = prev_[d] = d;
    return;
  }
  DartId p = prev_[anchor];
  next_[p] = d;
  prev_[d] = p;
  next_[d] = anchor;
  prev_[anchor] = d;
}

void EmbeddedGraph::unlink(DartId d) {
  VertexId v = origin_[d];
  if (next_[d] == d) {
    first_dart_[v] = kNone;
  } else {
    prev_[next_[d]] = prev_[d];
    next_[prev_[d]] = next_[d];
    if (first_dart_[v] == d) first_dart_[v] = next_[d];
  }
  next_[d] = prev_[d] = d;
}

void EmbeddedGraph::set_rotation(VertexId v, const std::vector<DartId>& order) {
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i) {
    next_[order[i]] = order[(i + 1) % k];
    prev_[order[(i + 1) % k]] = order[i];
  }
  if (k == 0) first_dart_[v] = kNone;
  else if (first_dart_[v] == kNone || origin_[first_dart_[v]] != v) first_dart_[v] = order[0];
}

EdgeId EmbeddedGraph::allocate_edge() {
  if (!free_edges_.empty()) {
    EdgeId e = free_edges_.back();
    free_edges_.pop_back();
    return e;
  }
  EdgeId e = edge_capacity();
  for (int i = 0; i < 2; ++i) {
    twin_.push_back(kNone);
    origin_.push_back(kNone);
    next_.push_back(kNone);
    prev_.push_back(kNone);
  }
  return e;
}

EdgeId EmbeddedGraph::insert_edge_at(Corner cu, Corner cv) {
  auto check_corner = [&](Corner c) {
    if (c.vertex < 0 || c.vertex >= vertex_count())
      throw Error(ErrorCode::UnknownVertex, "corner vertex out of range");
    if (c.is_null()) {
      if (first_dart_[c.vertex] != kNone)
        throw Error(ErrorCode::InvalidTarget, "null corner at non-isolated vertex");
    } else if (!dart_alive(c.dart) || origin_[c.dart] != c.vertex) {
      throw Error(ErrorCode::InvalidTarget, "corner dart does not belong to its vertex");
    }
  };
  check_corner(cu);
  check_corner(cv);
  const VertexId u = cu.vertex, v = cv.vertex;
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  if (component_of(u) == component_of(v) && face_of(cu) != face_of(cv))
    throw Error(ErrorCode::SameFaceViolation,
                "corners of " + std::to_string(u) + " and " + std::to_string(v) + " lie on different faces");

  EdgeId e = allocate_edge();
  const DartId du = (u < v) ? 2 * e : 2 * e + 1;
  const DartId dv = du ^ 1;
  twin_[du] = dv;
  twin_[dv] = du;
  origin_[du] = u;
  origin_[dv] = v;
  splice_before(du, cu.dart);
  splice_before(dv, cv.dart);
  adjacency_[pair_key(u, v)].push_back(e);
  ++live_edges_;
  touch();
  return e;
}

void EmbeddedGraph::delete_edge(EdgeId e) {
  if (!edge_alive(e)) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
  const DartId a = 2 * e, b = 2 * e + 1;
  auto& bucket = adjacency_[pair_key(origin_[a], origin_[b])];
  bucket.erase(std::find(bucket.begin(), bucket.end(), e));
  if (bucket.empty()) adjacency_.erase(pair_key(origin_[a], origin_[b]));
  unlink(a);
  unlink(b);
  origin_[a] = origin_[b] = kNone;
  twin_[a] = twin_[b] = kNone;
  free_edges_.push_back(e);
  --live_edges_;
  touch();
}

namespace {

// Darts from `from` (inclusive) to `to` (exclusive) following rot_next.
std::vector<DartId> arc(const EmbeddedGraph& g, DartId from, DartId to) {
  std::vector<DartId> out;
  DartId d = from;
  do {
    out.push_back(d);
    d = g.rot_next(d);
  } while (d != to && d != from);
  return out;
}

}  // namespace

FlipRegion EmbeddedGraph::analyze_articulation(const ArticulationFlip& flip) const {
  const Corner s = flip.seg_start, e = flip.seg_end;
  if (s.is_null() || e.is_null() || !dart_alive(s.dart) || !dart_alive(e.dart) ||
      origin_[s.dart] != origin_[e.dart])
    throw Error(ErrorCode::InvalidSegment, "segment ends must be darts at one vertex");
  const VertexId a = origin_[s.dart];
  FlipRegion region;
  region.poles = {a};
  std::vector<char> in_seg(origin_.size(), 0);
  for (DartId d = s.dart;; d = next_[d]) {
    region.arc_first.push_back(d);
    in_seg[d] = 1;
    if (d == e.dart) break;
  }
  const bool whole = region.arc_first.size() == static_cast<std::size_t>(degree(a));
  if (!whole) {
    if (flip.target.is_null() || !dart_alive(flip.target.dart) || origin_[flip.target.dart] != a ||
        in_seg[flip.target.dart])
      throw Error(ErrorCode::InvalidTarget, "target must be a dart at the articulation outside the segment");
  }
  std::vector<char> seen(first_dart_.size(), 0);
  seen[a] = 1;
  std::deque<VertexId> queue;
  for (DartId d : region.arc_first) {
    region.edges.push_back(edge_of(d));
    VertexId w = head(d);
    if (!seen[w]) {
      seen[w] = 1;
      queue.push_back(w);
      region.interior.push_back(w);
    }
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (DartId d : darts_at(x)) {
      VertexId w = head(d);
      if (w == a) {
        if (!in_seg[twin_[d]])
          throw Error(ErrorCode::InvalidSegment, "segment is not a union of components at the articulation");
        continue;
      }
      if (x < w) region.edges.push_back(edge_of(d));
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
        region.interior.push_back(w);
      }
    }
  }
  // Interior-interior edges were recorded once from the smaller endpoint.
  std::sort(region.edges.begin(), region.edges.end());
  region.edges.erase(std::unique(region.edges.begin(), region.edges.end()), region.edges.end());
  std::sort(region.interior.begin(), region.interior.end());
  return region;
}

void EmbeddedGraph::articulation_flip(const ArticulationFlip& flip) {
  FlipRegion region = analyze_articulation(flip);
  const VertexId a = region.poles[0];
  std::vector<DartId> seg = region.arc_first;
  if (flip.reflect) std::reverse(seg.begin(), seg.end());
  std::vector<DartId> order = seg;
  if (seg.size() != static_cast<std::size_t>(degree(a))) {
    std::vector<char> in_seg(origin_.size(), 0);
    for (DartId d : seg) in_seg[d] = 1;
    DartId t = flip.target.dart;
    DartId d = t;
    do {
      if (!in_seg[d]) order.push_back(d);
      d = next_[d];
    } while (d != t);
  }
  set_rotation(a, order);
  if (flip.reflect) {
    for (VertexId w : region.interior)
      for (DartId d : darts_at(w)) std::swap(next_[d], prev_[d]);
  }
  touch();
}

// Non-throwing core of analyze_separation: fills region, or returns the
// failure and leaves a reason.
std::optional<ErrorCode> EmbeddedGraph::separation_region(const SeparationFlip& flip, FlipRegion& region,
                                                          const char** why) const {
  const auto& c = flip.sigma;
  for (const Corner& x : c)
    if (x.is_null() || !dart_alive(x.dart)) {
      *why = "sigma needs four live corners";
      return ErrorCode::NotAFourCycle;
    }
  const VertexId s = origin_[c[0].dart], t = origin_[c[1].dart];
  if (origin_[c[3].dart] != s || origin_[c[2].dart] != t || s == t) {
    *why = "corners do not alternate between two vertices";
    return ErrorCode::NotAFourCycle;
  }
  const FaceId fu = face_of_dart(c[0].dart), fv = face_of_dart(c[2].dart);
  if (face_of_dart(c[1].dart) != fu || face_of_dart(c[3].dart) != fv || fu == fv) {
    *why = "corners do not alternate between two faces";
    return ErrorCode::NotAFourCycle;
  }

  region = FlipRegion{};
  region.poles = {s, t};
  region.arc_first = arc(*this, c[0].dart, c[3].dart);
  region.arc_second = arc(*this, c[2].dart, c[1].dart);
  std::vector<char> arc_tag(origin_.size(), 0);
  for (DartId d : region.arc_first) arc_tag[d] = 1;
  for (DartId d : region.arc_second) arc_tag[d] = 2;

  std::vector<char> seen(first_dart_.size(), 0);
  seen[s] = seen[t] = 1;
  std::vector<VertexId> queue;
  auto pole_tag = [&](VertexId w) { return w == s ? 1 : 2; };
  auto reach = [&](DartId d, bool from_arc) {
    const VertexId w = head(d);
    if (w == s || w == t) {
      if (arc_tag[twin_[d]] != pole_tag(w)) {
        *why = from_arc ? "pole-to-pole edge split across sides" : "cut does not separate the rotations into arcs";
        return false;
      }
      return true;
    }
    if (!seen[w]) {
      seen[w] = 1;
      queue.push_back(w);
      region.interior.push_back(w);
    }
    return true;
  };
  for (const auto* darts : {&region.arc_first, &region.arc_second})
    for (DartId d : *darts) {
      region.edges.push_back(edge_of(d));
      if (!reach(d, true)) return ErrorCode::NonContiguousCut;
    }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId x = queue[i];
    const DartId first = first_dart_[x];
    DartId d = first;
    do {
      const VertexId w = head(d);
      if (x < w && w != s && w != t) region.edges.push_back(edge_of(d));
      if (!reach(d, false)) return ErrorCode::NonContiguousCut;
      d = next_[d];
    } while (d != first);
  }
  // Large regions come out sorted faster by scanning marks than by sorting.
  if (region.interior.size() * 16 > seen.size()) {
    region.interior.clear();
    for (VertexId w = 0; w < vertex_count(); ++w)
      if (seen[w] && w != s && w != t) region.interior.push_back(w);
    std::vector<char> edge_mark(static_cast<std::size_t>(edge_capacity()), 0);
    for (EdgeId e : region.edges) edge_mark[e] = 1;
    region.edges.clear();
    for (EdgeId e = 0; e < edge_capacity(); ++e)
      if (edge_mark[e]) region.edges.push_back(e);
  } else {
    std::sort(region.edges.begin(), region.edges.end());
    region.edges.erase(std::unique(region.edges.begin(), region.edges.end()), region.edges.end());
    std::sort(region.interior.begin(), region.interior.end());
  }
  return std::nullopt;
}

FlipRegion EmbeddedGraph::analyze_separation(const SeparationFlip& flip) const {
  FlipRegion region;
  const char* why = "";
  if (auto err = separation_region(flip, region, &why)) throw Error(*err, why);
  return region;
}

std::optional<FlipRegion> EmbeddedGraph::try_analyze_separation(const SeparationFlip& flip) const {
  FlipRegion region;
  const char* why = "";
  if (separation_region(flip, region, &why)) return std::nullopt;
  return region;
}

SeparationFlip EmbeddedGraph::separation_flip(const SeparationFlip& flip) {
  FlipRegion region = analyze_separation(flip);
  auto reverse_arc = [&](VertexId pole, const std::vector<DartId>& arc_darts, DartId after) {
    std::vector<DartId> order(arc_darts.rbegin(), arc_darts.rend());
    for (DartId d = after; d != arc_darts.front(); d = next_[d]) order.push_back(d);
    set_rotation(pole, order);
  };
  const auto& c = flip.sigma;
  const DartId last_s = region.arc_first.back(), last_t = region.arc_second.back();
  if (region.arc_first.size() > 1) reverse_arc(region.poles[0], region.arc_first, c[3].dart);
  if (region.arc_second.size() > 1) reverse_arc(region.poles[1], region.arc_second, c[1].dart);
  for (VertexId w : region.interior)
    for (DartId d : darts_at(w)) std::swap(next_[d], prev_[d]);
  touch();
  return SeparationFlip{{corner(last_s), c[1], corner(last_t), c[3]}};
}

ValidationReport EmbeddedGraph::validate() const {
  ValidationReport report;
  auto fail = [&](const std::string& msg) {
    if (std::find(report.violations.begin(), report.violations.end(), msg) == report.violations.end())
      report.violations.push_back(msg);
  };
  const int nd = dart_capacity();
  for (DartId d = 0; d < nd; ++d) {
    if (origin_[d] == kNone) continue;
    DartId t = twin_[d];
    if (t < 0 || t >= nd || t == d || twin_[t] != d || origin_[t] == kNone) {
      fail("twin not involution");
      continue;
    }
    if (edge_of(t) != edge_of(d)) fail("twin crosses edges");
    if (origin_[t] == origin_[d]) fail("self-loop");
    if (next_[d] < 0 || next_[d] >= nd || prev_[next_[d]] != d) fail("rot_next not a permutation");
    else if (origin_[next_[d]] != origin_[d]) fail("rotation leaves its vertex");
  }
  if (!report.ok()) return report;

  std::vector<int> deg(first_dart_.size(), 0);
  for (DartId d = 0; d < nd; ++d)
    if (origin_[d] != kNone) ++deg[origin_[d]];
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if ((deg[v] == 0) != (first_dart_[v] == kNone)) {
      fail("first dart inconsistent at vertex " + std::to_string(v));
      continue;
    }
    if (deg[v] > 0 && degree(v) != deg[v]) fail("rotation at vertex " + std::to_string(v) + " is not a single orbit");
  }
  if (!report.ok()) return report;

  // Euler check per component, with faces traced independently of the cache.
  std::vector<int> comp(first_dart_.size(), -1);
  int ncomp = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (DartId d : darts_at(x))
        if (comp[head(d)] == -1) {
          comp[head(d)] = ncomp;
          stack.push_back(head(d));
        }
    }
    ++ncomp;
  }
  std::vector<long> vcount(ncomp, 0), ecount(ncomp, 0), fcount(ncomp, 0);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    ++vcount[comp[v]];
    if (deg[v] == 0) ++fcount[comp[v]];
  }
  std::vector<char> mark(nd, 0);
  for (DartId d = 0; d < nd; ++d) {
    if (origin_[d] == kNone) continue;
    if (d % 2 == 0) ++ecount[comp[origin_[d]]];
    if (mark[d]) continue;
    ++fcount[comp[origin_[d]]];
    DartId x = d;
    do {
      mark[x] = 1;
      x = face_next(x);
    } while (x != d);
  }
  for (int k = 0; k < ncomp; ++k)
    if (vcount[k] - ecount[k] + fcount[k] != 2)
      fail("Euler violation in component " + std::to_string(k) + ": V-E+F=" +
           std::to_string(vcount[k] - ecount[k] + fcount[k]));
  return report;
}

std::string dart_name(const EmbeddedGraph& g, DartId d) {
  return std::to_string(g.origin(d)) + ">" + std::to_string(g.head(d)) + "#" +
         std::to_string(EmbeddedGraph::edge_of(d));
}

std::string EmbeddedGraph::to_text() const {
  std::ostringstream out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    out << v << ":";
    for (DartId d : darts_at(v)) out << ' ' << dart_name(*this, d);
    out << '\n';
  }
  return out.str();
}

EmbeddedGraph EmbeddedGraph::from_text(const std::string& text) {
  struct Entry {
    VertexId from, to;
    EdgeId e;
  };
  std::vector<std::vector<Entry>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno));
    VertexId v = std::stoi(line.substr(0, colon));
    if (v != static_cast<VertexId>(rows.size()))
      throw Error(ErrorCode::ParseError, "vertices must be listed in order, line " + std::to_string(lineno));
    rows.emplace_back();
    std::istringstream toks(line.substr(colon + 1));
    std::string tok;
    while (toks >> tok) {
      auto gt = tok.find('>'), hash = tok.find('#');
      if (gt == std::string::npos || hash == std::string::npos || hash < gt)
        throw Error(ErrorCode::ParseError, "bad dart '" + tok + "' on line " + std::to_string(lineno));
      Entry en{std::stoi(tok.substr(0, gt)), std::stoi(tok.substr(gt + 1, hash - gt - 1)),
               std::stoi(tok.substr(hash + 1))};
      if (en.from != v) throw Error(ErrorCode::ParseError, "dart origin mismatch on line " + std::to_string(lineno));
      rows.back().push_back(en);
    }
  }
  EmbeddedGraph g(static_cast<int>(rows.size()));
  EdgeId max_e = -1;
  for (auto& row : rows)
    for (auto& en : row) max_e = std::max(max_e, en.e);
  g.twin_.assign(static_cast<std::size_t>(2 * (max_e + 1)), kNone);
  g.origin_.assign(g.twin_.size(), kNone);
  g.next_.assign(g.twin_.size(), kNone);
  g.prev_.assign(g.twin_.size(), kNone);
  for (VertexId v = 0; v < static_cast<VertexId>(rows.size()); ++v) {
    std::vector<DartId> order;
    for (auto& en : rows[v]) {
      if (en.to < 0 || en.to >= static_cast<VertexId>(rows.size()) || en.to == v)
        throw Error(ErrorCode::ParseError, "bad dart head at vertex " + std::to_string(v));
      DartId d = (en.from < en.to) ? 2 * en.e : 2 * en.e + 1;
      if (g.origin_[d] != kNone) throw Error(ErrorCode::ParseError, "dart listed twice");
      g.origin_[d] = v;
      g.twin_[d] = d ^ 1;
      order.push_back(d);
    }
    if (!order.empty()) {
      g.first_dart_[v] = order[0];
      g.set_rotation(v, order);
    }
  }
  for (EdgeId e = 0; e <= max_e; ++e) {
    bool a = g.origin_[2 * e] != kNone, b = g.origin_[2 * e + 1] != kNone;
    if (a != b) throw Error(ErrorCode::ParseError, "edge " + std::to_string(e) + " has one dart");
    if (!a) {
      g.twin_[2 * e] = g.twin_[2 * e + 1] = kNone;
      continue;
    }
    if (g.origin_[2 * e] > g.origin_[2 * e + 1]) throw Error(ErrorCode::ParseError, "inconsistent dart names");
    g.adjacency_[pair_key(g.origin_[2 * e], g.origin_[2 * e + 1])].push_back(e);
    ++g.live_edges_;
  }
  for (EdgeId e = max_e; e >= 0; --e)
    if (g.origin_[2 * e] == kNone) g.free_edges_.push_back(e);
  g.touch();
  return g;
}

EmbeddedGraph EmbeddedGraph::from_rotations(const std::vector<std::vector<VertexId>>& rotations) {
  return from_rotations(rotations, {});
}

EmbeddedGraph EmbeddedGraph::from_rotations(const std::vector<std::vector<VertexId>>& rotations,
                                            const std::vector<std::pair<VertexId, VertexId>>& edge_ids) {
  const int n = static_cast<int>(rotations.size());
  std::unordered_map<std::uint64_t, EdgeId> ids;
  EdgeId next_id = 0;
  for (auto [a, b] : edge_ids) ids.emplace(pair_key(a, b), next_id++);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : rotations[v])
      if (ids.emplace(pair_key(v, w), next_id).second) ++next_id;
  std::ostringstream text;
  for (VertexId v = 0; v < n; ++v) {
    text << v << ":";
    for (VertexId w : rotations[v]) text << ' ' << v << '>' << w << '#' << ids[pair_key(v, w)];
    text << '\n';
  }
  EmbeddedGraph g = from_text(text.str());
  if (g.vertex_count() < n) {
    // Trailing isolated vertices produce empty lines that from_text keeps; pad defensively.
    g.first_dart_.resize(static_cast<std::size_t>(n), kNone);
  }
  return g;
}

bool EmbeddedGraph::same_rotation_system(const EmbeddedGraph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    auto a = darts_at(v), b = other.darts_at(v);
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::rotate(b.begin(), it, b.end());
    if (a != b) return false;
  }
  return true;
}

}  // namespace dynplanar
