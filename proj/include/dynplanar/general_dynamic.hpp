#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dynplanar/dynamic_planarity.hpp"

namespace dynplanar {

// Any simple graph under edge insertions and deletions. A maximal-by-discipline
// planar subgraph is embedded; the remaining edges wait in a per-component
// pile. A component is planar exactly when its pile is empty.
class GeneralDynamicGraph {
 public:
  explicit GeneralDynamicGraph(int vertex_count, Backend backend = Backend::Reference);

  int vertex_count() const { return static_cast<int>(label_.size()); }
  int edge_count() const { return edge_total_; }
  bool has_edge(VertexId u, VertexId v) const;
  bool is_deferred(VertexId u, VertexId v) const;

  void insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  bool is_planar() const { return nonplanar_.empty(); }
  bool component_planar(VertexId w) const;

  PlanarDynamicGraph& planar() { return planar_; }
  const PlanarDynamicGraph& planar() const { return planar_; }
  // Deferred edges of w's component in insertion order.
  std::vector<std::pair<VertexId, VertexId>> pile_of(VertexId w) const;
  std::size_t deferred_count() const { return deferred_.size(); }
  // Every edge currently stored, embedded or deferred.
  std::vector<std::pair<VertexId, VertexId>> all_edges() const;
  // Number of insertions that went to a pile (directly or after rejection).
  std::uint64_t deferrals() const { return deferrals_; }

 private:
  using Key = std::pair<VertexId, VertexId>;
  struct PileEntry {
    Key edge;
    // Set when the embedded subgraph rejected this edge and nothing has been
    // deleted from that subgraph since: the pile's planarity certificate.
    bool certificate = false;
  };
  // Keyed by insertion sequence so that iteration is FIFO.
  using Pile = std::map<std::uint64_t, PileEntry>;

  static Key key(VertexId u, VertexId v) { return u < v ? Key{u, v} : Key{v, u}; }
  void check_vertex(VertexId v) const;
  void defer(int comp, Key e, std::uint64_t seq, bool certificate);
  void relabel(VertexId start, int from, int to);
  void split_if_disconnected(VertexId u, VertexId v);
  void drain(int comp);
  void refresh_bit(int comp);

  PlanarDynamicGraph planar_;
  std::vector<std::set<VertexId>> adj_;  // all edges
  std::vector<int> label_;
  std::vector<int> comp_size_;  // indexed by label; splits append fresh labels
  std::map<int, Pile> piles_;
  std::map<Key, std::uint64_t> deferred_;  // edge -> sequence number
  std::set<int> nonplanar_;
  int edge_total_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t deferrals_ = 0;
};

}  // namespace dynplanar
