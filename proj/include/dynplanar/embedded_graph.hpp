#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dynplanar/types.hpp"

namespace dynplanar {

// Segment of a's rotation from seg_start.dart to seg_end.dart (inclusive,
// following rot_next), reinserted in front of target.dart after removal.
struct ArticulationFlip {
  Corner seg_start;
  Corner seg_end;
  Corner target;
  bool reflect = false;
};

// sigma = (c_x^u, c_y^u, c_y^v, c_x^v). The first and last corners sit at s,
// the middle two at t; c_x^u, c_y^u lie on face f_u and c_y^v, c_x^v on f_v.
// The reflected side consists of the darts [c_x^u, c_x^v) at s and
// [c_y^v, c_y^u) at t, taken in rot_next order, plus everything hanging off them.
struct SeparationFlip {
  std::array<Corner, 4> sigma;
};

using FlipDescriptor = std::variant<ArticulationFlip, SeparationFlip>;

// Subgraph moved by a flip: poles are the attachment vertices ({a} or {s,t}),
// interior the vertices strictly inside it.
struct FlipRegion {
  std::vector<VertexId> poles;
  std::vector<VertexId> interior;
  std::vector<EdgeId> edges;
  std::vector<DartId> arc_first;   // darts at poles[0] in rotation order
  std::vector<DartId> arc_second;  // darts at poles[1] (separation flips only)

  bool contains_strictly(VertexId v) const;
  std::size_t size() const { return interior.size() + poles.size() + edges.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class EmbeddedGraph {
 public:
  explicit EmbeddedGraph(int vertex_count = 0);

  int vertex_count() const { return static_cast<int>(first_dart_.size()); }
  int edge_count() const { return live_edges_; }
  int edge_capacity() const { return static_cast<int>(origin_.size() / 2); }
  int dart_capacity() const { return static_cast<int>(origin_.size()); }
  std::uint64_t version() const { return version_; }

  bool edge_alive(EdgeId e) const;
  bool dart_alive(DartId d) const { return d >= 0 && d < dart_capacity() && origin_[d] != kNone; }
  static EdgeId edge_of(DartId d) { return d >> 1; }
  DartId twin(DartId d) const { return twin_[d]; }
  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[twin_[d]]; }
  DartId rot_next(DartId d) const { return next_[d]; }
  DartId rot_prev(DartId d) const { return prev_[d]; }
  DartId face_next(DartId d) const { return next_[twin_[d]]; }
  DartId first_dart(VertexId v) const { return first_dart_[v]; }
  int degree(VertexId v) const;
  std::vector<DartId> darts_at(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<EdgeId> edges() const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  EdgeId find_edge(VertexId u, VertexId v) const;

  Corner corner(DartId d) const { return Corner{d, origin_[d]}; }
  Corner null_corner(VertexId v) const { return Corner{kNone, v}; }
  // Every corner at v; the null corner when v is isolated.
  std::vector<Corner> corners_at(VertexId v) const;

  // Faces are recomputed lazily after each mutation; ids are only stable
  // between mutations.
  int face_count() const;
  FaceId face_of(Corner c) const;
  FaceId face_of_dart(DartId d) const;
  std::vector<Corner> face_walk(Corner c) const;
  std::vector<Corner> face_corners(FaceId f) const;
  Corner face_representative(FaceId f) const;
  bool vertex_on_face(VertexId v, FaceId f) const;
  std::vector<Corner> corners_between(VertexId v, FaceId f) const;
  std::vector<FaceId> faces_at(VertexId v) const;

  int component_of(VertexId v) const;
  int component_count() const;

  EdgeId insert_edge_at(Corner cu, Corner cv);
  void delete_edge(EdgeId e);

  FlipRegion analyze_articulation(const ArticulationFlip& flip) const;
  FlipRegion analyze_separation(const SeparationFlip& flip) const;
  // Same analysis; nullopt where analyze_separation would throw.
  std::optional<FlipRegion> try_analyze_separation(const SeparationFlip& flip) const;
  void articulation_flip(const ArticulationFlip& flip);
  // Returns the descriptor that undoes this flip in the new embedding.
  SeparationFlip separation_flip(const SeparationFlip& flip);

  ValidationReport validate() const;

  // One line per vertex: "v: u>w#e ..." in rotation order from first_dart.
  std::string to_text() const;
  static EmbeddedGraph from_text(const std::string& text);

  // Builds an embedding from explicit per-vertex rotations of neighbours.
  // Only valid for simple graphs; edges are numbered in order of first appearance.
  static EmbeddedGraph from_rotations(const std::vector<std::vector<VertexId>>& rotations);
  // Same, with edge i of edge_ids numbered i; remaining edges follow.
  static EmbeddedGraph from_rotations(const std::vector<std::vector<VertexId>>& rotations,
                                      const std::vector<std::pair<VertexId, VertexId>>& edge_ids);

  bool same_rotation_system(const EmbeddedGraph& other) const;

  // Test hook for exercising validate(); never used by library code.
  void debug_set_twin(DartId d, DartId t) { twin_[d] = t; ++version_; }

 private:
  std::optional<ErrorCode> separation_region(const SeparationFlip& flip, FlipRegion& region, const char** why) const;
  void ensure_faces() const;
  void ensure_components() const;
  void touch() { ++version_; }
  void splice_before(DartId d, DartId anchor);
  void unlink(DartId d);
  void set_rotation(VertexId v, const std::vector<DartId>& order);
  EdgeId allocate_edge();

  std::vector<DartId> twin_;
  std::vector<VertexId> origin_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
  std::vector<DartId> first_dart_;
  std::vector<EdgeId> free_edges_;
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> adjacency_;
  int live_edges_ = 0;
  std::uint64_t version_ = 0;

  mutable std::uint64_t faces_version_ = ~std::uint64_t{0};
  mutable std::vector<FaceId> dart_face_;
  mutable std::vector<FaceId> isolated_face_;
  mutable std::vector<Corner> face_rep_;

  mutable std::uint64_t comps_version_ = ~std::uint64_t{0};
  mutable std::vector<int> component_;
  mutable int component_count_ = 0;
};

std::string dart_name(const EmbeddedGraph& g, DartId d);

}  // namespace dynplanar
