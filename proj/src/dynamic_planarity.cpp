#include "dynplanar/dynamic_planarity.hpp"

#include <stdexcept>
#include <string>

namespace dynplanar {

FlipCounters& FlipCounters::operator+=(const FlipCounters& o) {
  articulation += o.articulation;
  sr += o.sr;
  p += o.p;
  noncritical += o.noncritical;
  return *this;
}

PlanarDynamicGraph::PlanarDynamicGraph(int vertex_count, Backend backend)
    : graph_(std::make_unique<EmbeddedGraph>(vertex_count)),
      index_(std::make_unique<TreeCotreeIndex>(*graph_, backend)),
      search_(std::make_unique<FlipSearch>(*graph_, *index_)) {}

void PlanarDynamicGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

bool PlanarDynamicGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return graph_->find_edge(u, v) != kNone;
}

void PlanarDynamicGraph::begin_op() {
  search_->clear_log();
  // Safety valve: a correct search never comes close to this.
  search_->set_flip_budget(10 * static_cast<std::size_t>(graph_->edge_count() + graph_->vertex_count()));
  last_op_ = {};
}

void PlanarDynamicGraph::end_op() {
  for (const FlipRecord& r : search_->log()) {
    switch (r.kind) {
      case FlipKind::Articulation: ++last_op_.articulation; break;
      case FlipKind::SR: ++last_op_.sr; break;
      case FlipKind::P: ++last_op_.p; break;
    }
    if (!r.critical) ++last_op_.noncritical;
  }
  flips_ += last_op_;
  if (validate_after_ops_) {
    const ValidationReport report = graph_->validate();
    if (!report.ok()) throw std::logic_error("embedding invalid after operation: " + report.violations.front());
  }
}

bool PlanarDynamicGraph::link(VertexId u, VertexId v) {
  if (graph_->component_of(u) != graph_->component_of(v)) return true;
  return search_->multi_flip_linkable(u, v);
}

InsertOutcome PlanarDynamicGraph::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  if (graph_->find_edge(u, v) != kNone)
    throw Error(ErrorCode::DuplicateEdge, std::to_string(u) + "-" + std::to_string(v));
  begin_op();
  ++ops_.inserts;
  InsertOutcome outcome = InsertOutcome::Rejected;
  if (graph_->component_of(u) != graph_->component_of(v)) {
    graph_->insert_edge_at(graph_->corners_at(u).front(), graph_->corners_at(v).front());
    outcome = InsertOutcome::Accepted;
  } else if (search_->multi_flip_linkable(u, v)) {
    const auto corners = index_->linkable(u, v);
    if (!corners) throw std::logic_error("linkable pair without shared corners");
    graph_->insert_edge_at(corners->first, corners->second);
    outcome = InsertOutcome::Accepted;
  }
  ++(outcome == InsertOutcome::Accepted ? ops_.accepted : ops_.rejected);
  end_op();
  return outcome;
}

void PlanarDynamicGraph::remove(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  const EdgeId e = graph_->find_edge(u, v);
  if (e == kNone) throw Error(ErrorCode::UnknownEdge, std::to_string(u) + "-" + std::to_string(v));
  begin_op();
  ++ops_.deletes;
  graph_->delete_edge(e);
  end_op();
  delete_flips_ += last_op_;
}

bool PlanarDynamicGraph::query_compatible(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  begin_op();
  ++ops_.queries;
  const bool yes = graph_->find_edge(u, v) != kNone || link(u, v);
  end_op();
  return yes;
}

EdgeNeighbors PlanarDynamicGraph::embedding_neighbors(EdgeId e) const {
  if (!graph_->edge_alive(e)) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
  const DartId d = 2 * e;
  return {graph_->rot_prev(d), graph_->rot_next(d), graph_->rot_prev(d + 1), graph_->rot_next(d + 1)};
}

}  // namespace dynplanar
