#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynplanar/embedded_graph.hpp"

namespace dynplanar {

enum class TreeKind { Primal, Dual };
enum class PathEnd { First, Last };
enum class SearchGoal { First, Last };
// Left is the side swept first when walking a face orbit forward from the
// point where the path enters it; for primal paths it is the counterclockwise
// side of the direction of travel.
enum class PathSide { Left, Right, Both };

enum class Backend { Reference, Balanced };

// Cycle closed by a non-tree edge over the primal spanning tree. vertices[i]
// and vertices[i+1] are joined by edges[i]; the last edge is the closing edge.
struct CycleHandle {
  EdgeId closing_edge = kNone;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  // Region label (0 or 1) per face id of the snapshot the cycle was built in;
  // -1 for faces of other components.
  std::vector<signed char> face_side;

  bool contains_vertex(VertexId v) const;
  bool contains_edge(EdgeId e) const;
  int index_of(VertexId v) const;
};

// Dual fundamental cycle: faces[i] and faces[i+1] are separated by crossed[i],
// and crossed.back() (a primal tree edge) closes the cycle back to faces[0].
struct DualCycle {
  std::vector<FaceId> faces;
  std::vector<EdgeId> crossed;
};

// Where a dual path passes through one face: its orbit split into the part
// swept forward from the entry point (left) and the rest (right).
struct FaceCrossing {
  FaceId face = kNone;
  std::vector<Corner> left;   // nearest to the entry first
  std::vector<Corner> right;  // nearest to the entry first
};

// Interdigitating primal spanning forest and dual spanning forest of the
// non-tree edges. The reference backend rebuilds everything from scratch
// whenever the graph version changes.
class TreeCotreeIndex {
 public:
  explicit TreeCotreeIndex(const EmbeddedGraph& g, Backend backend = Backend::Reference);

  const EmbeddedGraph& graph() const { return g_; }
  Backend backend() const { return backend_; }

  bool in_primal_tree(EdgeId e) const;
  VertexId primal_parent(VertexId v) const;
  EdgeId primal_parent_edge(VertexId v) const;
  int primal_depth(VertexId v) const;
  FaceId dual_parent(FaceId f) const;
  EdgeId dual_parent_edge(FaceId f) const;
  int dual_depth(FaceId f) const;
  std::vector<EdgeId> primal_tree_edges() const;
  std::vector<EdgeId> dual_tree_edges() const;

  std::vector<VertexId> primal_path(VertexId a, VertexId b) const;
  std::vector<EdgeId> primal_path_edges(VertexId a, VertexId b) const;
  std::vector<FaceId> dual_path(FaceId a, FaceId b) const;
  // Primal edges whose duals form the dual tree path a..b.
  std::vector<EdgeId> dual_path_edges(FaceId a, FaceId b) const;

  EdgeId path_end_edge(TreeKind tree, int a, int b, PathEnd end) const;
  int meet(TreeKind tree, int x, int y, int z) const;

  CycleHandle fundamental_cycle(EdgeId e) const;
  VertexId projection(const CycleHandle& c, VertexId w) const;
  std::pair<EdgeId, EdgeId> cycle_edges_at(const CycleHandle& c, VertexId w) const;
  int side_of(const CycleHandle& c, FaceId f) const;
  bool same_side(const CycleHandle& c, FaceId f1, FaceId f2) const;
  // The face of e lying in the given region of c. For an edge off the cycle
  // both faces share a region; the one of its lower dart is returned then.
  FaceId face_on_side(const CycleHandle& c, EdgeId e, int side) const;
  DualCycle dual_fundamental_cycle(EdgeId tree_edge) const;

  std::optional<std::pair<Corner, Corner>> linkable(VertexId u, VertexId v) const;

  // Faces met by the dual path from face(from) to face(to), with the corners
  // of each face on both sides of the path.
  std::vector<FaceCrossing> dual_crossings(Corner from, Corner to) const;

  // Mark-and-search along the dual tree path between two corners: a face
  // incident to every marked vertex on the requested side(s).
  std::optional<FaceCrossing> search_dual_path(Corner from, Corner to, const std::vector<VertexId>& marks,
                                               SearchGoal goal, PathSide side) const;
  // Mark-and-search along the primal tree path between two vertices: an
  // internal vertex incident to every marked face on the requested side(s).
  VertexId search_primal_path(VertexId from, VertexId to, const std::vector<FaceId>& marks, SearchGoal goal,
                              PathSide side) const;
  // Corners of w on the left/right of the primal tree path through it.
  std::pair<std::vector<Corner>, std::vector<Corner>> primal_sides(VertexId prev, VertexId w, VertexId next) const;

  std::string dump() const;

 private:
  void ensure() const;
  void rebuild() const;
  int lca(TreeKind tree, int a, int b) const;
  int parent_of(TreeKind tree, int x) const;
  int depth_of(TreeKind tree, int x) const;
  void check_same_tree(TreeKind tree, int a, int b) const;
  DartId dart_from_to(VertexId a, VertexId b, EdgeId e) const;

  const EmbeddedGraph& g_;
  Backend backend_;

  mutable std::uint64_t version_ = ~std::uint64_t{0};
  mutable std::vector<char> in_tree_;
  mutable std::vector<VertexId> vparent_;
  mutable std::vector<EdgeId> vparent_edge_;
  mutable std::vector<int> vdepth_;
  mutable std::vector<int> vroot_;
  mutable std::vector<FaceId> fparent_;
  mutable std::vector<EdgeId> fparent_edge_;
  mutable std::vector<int> fdepth_;
  mutable std::vector<int> froot_;
  mutable std::vector<int> orbit_pos_;  // per dart
  mutable std::vector<std::vector<DartId>> orbit_;  // per face
  mutable std::unordered_map<EdgeId, CycleHandle> cycle_cache_;  // cleared on rebuild
};

}  // namespace dynplanar
