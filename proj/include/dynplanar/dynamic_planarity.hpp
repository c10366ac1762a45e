#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "dynplanar/embedded_graph.hpp"
#include "dynplanar/flip_search.hpp"
#include "dynplanar/tree_cotree.hpp"

namespace dynplanar {

struct FlipCounters {
  std::uint64_t articulation = 0;
  std::uint64_t sr = 0;
  std::uint64_t p = 0;
  // Flips that failed the instrumented criticality check; zero unless buggy.
  std::uint64_t noncritical = 0;

  std::uint64_t total() const { return articulation + sr + p; }
  FlipCounters& operator+=(const FlipCounters& o);
};

struct OpCounters {
  std::uint64_t inserts = 0;  // attempted
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t deletes = 0;
  std::uint64_t queries = 0;
};

enum class InsertOutcome { Accepted, Rejected };

// Rotation predecessor and successor of both darts of an edge:
// {rot_prev(2e), rot_next(2e), rot_prev(2e+1), rot_next(2e+1)}.
using EdgeNeighbors = std::array<DartId, 4>;

// A planar graph under edge insertions and deletions that keeps a combinatorial
// embedding valid at all times. Insertions flip the embedding as needed;
// deletions never flip. Queries may flip too.
class PlanarDynamicGraph {
 public:
  explicit PlanarDynamicGraph(int vertex_count, Backend backend = Backend::Reference);
  PlanarDynamicGraph(const PlanarDynamicGraph&) = delete;
  PlanarDynamicGraph& operator=(const PlanarDynamicGraph&) = delete;

  int vertex_count() const { return graph_->vertex_count(); }
  int edge_count() const { return graph_->edge_count(); }
  const EmbeddedGraph& embedding() const { return *graph_; }
  bool has_edge(VertexId u, VertexId v) const;

  InsertOutcome insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  bool query_compatible(VertexId u, VertexId v);
  EdgeNeighbors embedding_neighbors(EdgeId e) const;

  // Runs validate() after every public operation and throws std::logic_error
  // on the first violation. On by default.
  void set_validate_after_ops(bool on) { validate_after_ops_ = on; }

  const FlipCounters& flips() const { return flips_; }
  const FlipCounters& last_op_flips() const { return last_op_; }
  // Flips charged to deletions; the lazy discipline keeps this at zero.
  const FlipCounters& delete_flips() const { return delete_flips_; }
  const OpCounters& ops() const { return ops_; }
  // Every flip of the last operation, with its classification.
  const std::vector<FlipRecord>& last_op_log() const { return search_->log(); }

 private:
  bool link(VertexId u, VertexId v);
  void begin_op();
  void end_op();
  void check_vertex(VertexId v) const;

  std::unique_ptr<EmbeddedGraph> graph_;
  std::unique_ptr<TreeCotreeIndex> index_;
  std::unique_ptr<FlipSearch> search_;
  bool validate_after_ops_ = true;
  FlipCounters flips_;
  FlipCounters last_op_;
  FlipCounters delete_flips_;
  OpCounters ops_;
};

}  // namespace dynplanar
