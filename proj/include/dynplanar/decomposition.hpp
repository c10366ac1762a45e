#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynplanar/edge_list.hpp"
#include "dynplanar/types.hpp"

namespace dynplanar {

// Block-cut tree of one connected component. Vertex ids are those of the
// input graph; vertices without edges are ignored.
enum class BCKind { Block, Cut };

struct BCNode {
  BCKind kind = BCKind::Block;
  std::vector<VertexId> vertices;                      // sorted; a cut node holds one
  std::vector<std::pair<VertexId, VertexId>> edges;    // block edges, empty for cut nodes
  std::vector<int> adj;
};

struct BCTree {
  std::vector<BCNode> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  // The cut node of v if v is a cutvertex, else the block holding v; -1 if absent.
  int node_of(VertexId v) const;
  // Empty when the strict conditions hold, else one line per violation.
  std::vector<std::string> check() const;
  std::string to_dot() const;
};

// Throws EmptyComponent without edges and DifferentComponents when the
// edges do not form one connected component.
BCTree bc_tree(const EdgeListGraph& component);
std::vector<int> critical_path(const BCTree& tree, VertexId u, VertexId v);

enum class SPQRKind { S, P, R };
const char* spqr_kind_name(SPQRKind kind);

struct SkeletonEdge {
  VertexId a = kNone;
  VertexId b = kNone;
  int real = -1;      // index into the block's edge list, or -1 if virtual
  int neighbor = -1;  // tree node on the other side of a virtual edge
};

struct SPQRNode {
  SPQRKind kind = SPQRKind::R;
  std::vector<VertexId> vertices;  // sorted
  std::vector<SkeletonEdge> edges;
  std::vector<int> adj;

  bool has_vertex(VertexId v) const;
  // The virtual edge leading to tree neighbour `other`.
  const SkeletonEdge& virtual_toward(int other) const;
};

struct SPQRTree {
  EdgeListGraph block;
  std::vector<SPQRNode> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<std::string> check() const;
  // Real edges of all skeletons, as block edge indices, sorted. Gluing the
  // skeletons back together along virtual edges yields exactly these.
  std::vector<int> reglued_edges() const;
  std::string to_dot() const;
};

// Throws TooSmall for fewer than three edges and std::invalid_argument when
// the edges are not biconnected.
SPQRTree spqr_tree(const EdgeListGraph& block);

// Tree path between the closest non-P nodes housing u and v. Throws
// NotSameBlock when either vertex is missing from the tree.
std::vector<int> critical_path(const SPQRTree& tree, VertexId u, VertexId v);

// Convenience forms on a whole graph.
std::vector<int> bc_critical_path(const EdgeListGraph& g, VertexId u, VertexId v);
std::vector<int> spqr_critical_path(const EdgeListGraph& g, VertexId u, VertexId v);

// Skeleton faces of an R node, each as its vertex set and edge list (pairs
// sorted). Triconnected skeletons have a unique face structure.
struct SkeletonFace {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};
std::vector<SkeletonFace> skeleton_faces(const SPQRNode& node);

struct SolidPath {
  std::vector<int> nodes;  // from the end nearest the root downwards
  bool critical = false;
  // Strut endpoints handed to this path: the attachment vertex above it and
  // the designated vertex at its bottom. Only set on block-cut paths.
  VertexId first = kNone;
  VertexId last = kNone;
};

struct BlockSolidPaths {
  int bc_node = -1;
  VertexId first = kNone;  // the pair the block is critical for
  VertexId last = kNone;
  std::optional<SPQRTree> spqr;  // absent for bridges
  int root = -1;
  std::vector<SolidPath> paths;
};

struct ComponentSolidPaths {
  BCTree tree;
  int root = -1;
  VertexId root_vertex = kNone;
  std::vector<SolidPath> paths;
  std::vector<BlockSolidPaths> blocks;  // one per B node, in node order

  const BlockSolidPaths& block_at(int bc_node) const;
};

struct SolidPathSet {
  VertexId u = kNone;
  VertexId v = kNone;
  bool same_component = false;
  std::vector<ComponentSolidPaths> components;

  std::string to_dot() const;
};

// Heavy-path decomposition (weights are subtree node counts, ties to the
// smaller node id) of the BC forest and of every block's SPQR tree. The
// u-v path is forced to be one solid path in each tree it crosses. Nodes
// strictly inside a solid path keep only their path neighbours on it; their
// other children start new paths.
SolidPathSet presplit_decomposition(const EdgeListGraph& g, VertexId u, VertexId v);

}  // namespace dynplanar
