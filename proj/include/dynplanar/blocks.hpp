#pragma once

#include <utility>
#include <vector>

#include "dynplanar/edge_list.hpp"
#include "dynplanar/embedded_graph.hpp"
#include "dynplanar/types.hpp"

namespace dynplanar {

// Biconnected components (bridges count as two-vertex blocks) of a snapshot.
struct BlockDecomposition {
  std::vector<int> edge_block;  // indexed by edge id; -1 for unused ids
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<std::vector<VertexId>> block_vertices;  // sorted
  std::vector<std::vector<int>> vertex_blocks;         // sorted block ids

  int block_count() const { return static_cast<int>(block_edges.size()); }
  bool is_cut(VertexId v) const { return vertex_blocks[v].size() > 1; }
  // The unique block containing both vertices, or -1.
  int common_block(VertexId a, VertexId b) const;
  bool same_block(VertexId a, VertexId b) const { return common_block(a, b) >= 0; }
  // Cut vertices strictly between a and b on the block-cut tree path, in
  // order from a. Throws DifferentComponents when no path exists.
  std::vector<VertexId> cut_vertices_between(VertexId a, VertexId b) const;
};

// ends[e] = endpoints of edge id e, or (kNone, kNone) for an unused id.
BlockDecomposition compute_blocks(int n, const std::vector<std::pair<VertexId, VertexId>>& ends);
BlockDecomposition compute_blocks(const EmbeddedGraph& g);
BlockDecomposition compute_blocks(const EdgeListGraph& g);

}  // namespace dynplanar
