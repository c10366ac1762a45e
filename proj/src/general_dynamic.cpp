#include "dynplanar/general_dynamic.hpp"

#include <deque>
#include <string>

namespace dynplanar {

GeneralDynamicGraph::GeneralDynamicGraph(int vertex_count, Backend backend)
    : planar_(vertex_count, backend), adj_(vertex_count), label_(vertex_count), comp_size_(vertex_count, 1) {
  for (VertexId v = 0; v < vertex_count; ++v) label_[v] = v;
}

void GeneralDynamicGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

bool GeneralDynamicGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) > 0;
}

bool GeneralDynamicGraph::is_deferred(VertexId u, VertexId v) const { return deferred_.count(key(u, v)) > 0; }

bool GeneralDynamicGraph::component_planar(VertexId w) const {
  check_vertex(w);
  return !nonplanar_.count(label_[w]);
}

std::vector<std::pair<VertexId, VertexId>> GeneralDynamicGraph::pile_of(VertexId w) const {
  check_vertex(w);
  std::vector<Key> out;
  auto it = piles_.find(label_[w]);
  if (it != piles_.end())
    for (const auto& [seq, entry] : it->second) out.push_back(entry.edge);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> GeneralDynamicGraph::all_edges() const {
  std::vector<Key> out;
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void GeneralDynamicGraph::refresh_bit(int comp) {
  auto it = piles_.find(comp);
  if (it != piles_.end() && it->second.empty()) {
    piles_.erase(it);
    it = piles_.end();
  }
  if (it == piles_.end()) nonplanar_.erase(comp);
  else nonplanar_.insert(comp);
}

void GeneralDynamicGraph::defer(int comp, Key e, std::uint64_t seq, bool certificate) {
  piles_[comp].emplace(seq, PileEntry{e, certificate});
  deferred_[e] = seq;
  refresh_bit(comp);
}

// Moves every vertex reachable from start (all labelled `from`) to `to`.
void GeneralDynamicGraph::relabel(VertexId start, int from, int to) {
  std::deque<VertexId> queue{start};
  label_[start] = to;
  int moved = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj_[x])
      if (label_[y] == from) {
        label_[y] = to;
        ++moved;
        queue.push_back(y);
      }
  }
  comp_size_[from] -= moved;
  comp_size_[to] += moved;
}

void GeneralDynamicGraph::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  if (adj_[u].count(v)) throw Error(ErrorCode::DuplicateEdge, std::to_string(u) + "-" + std::to_string(v));
  const std::uint64_t seq = next_seq_++;
  int cu = label_[u], cv = label_[v];
  if (cu != cv) {
    // Small-to-large merge of labels and piles.
    if (comp_size_[cu] > comp_size_[cv]) std::swap(cu, cv), std::swap(u, v);
    relabel(u, cu, cv);
    if (auto it = piles_.find(cu); it != piles_.end()) {
      piles_[cv].merge(it->second);
      piles_.erase(it);
    }
    nonplanar_.erase(cu);
    refresh_bit(cv);
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edge_total_;
  const int comp = label_[u];
  if (nonplanar_.count(comp)) {
    ++deferrals_;
    defer(comp, key(u, v), seq, false);
    return;
  }
  if (planar_.insert(u, v) == InsertOutcome::Rejected) {
    ++deferrals_;
    defer(comp, key(u, v), seq, true);
  }
}

void GeneralDynamicGraph::split_if_disconnected(VertexId u, VertexId v) {
  const int comp = label_[u];
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexId> queue{u};
  seen[u] = 1;
  int reached = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
  }
  if (seen[v]) return;
  const VertexId mover = reached <= comp_size_[comp] - reached ? u : v;
  const int fresh = static_cast<int>(comp_size_.size());
  comp_size_.push_back(0);
  relabel(mover, comp, fresh);
  auto it = piles_.find(comp);
  if (it == piles_.end()) return;
  Pile& old = it->second;
  for (auto p = old.begin(); p != old.end();) {
    if (label_[p->second.edge.first] == fresh) {
      piles_[fresh].insert(*p);
      p = old.erase(p);
    } else {
      ++p;
    }
  }
  refresh_bit(comp);
  refresh_bit(fresh);
}

void GeneralDynamicGraph::drain(int comp) {
  auto it = piles_.find(comp);
  if (it == piles_.end()) return;
  Pile& pile = it->second;
  for (auto p = pile.begin(); p != pile.end();) {
    const auto [a, b] = p->second.edge;
    if (planar_.insert(a, b) == InsertOutcome::Rejected) {
      p->second.certificate = true;
      break;
    }
    deferred_.erase(p->second.edge);
    p = pile.erase(p);
  }
  refresh_bit(comp);
}

void GeneralDynamicGraph::remove(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u].count(v)) throw Error(ErrorCode::UnknownEdge, std::to_string(u) + "-" + std::to_string(v));
  const Key e = key(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edge_total_;
  if (auto d = deferred_.find(e); d != deferred_.end()) {
    const int comp = label_[u];
    Pile& pile = piles_[comp];
    pile.erase(d->second);
    deferred_.erase(d);
    split_if_disconnected(u, v);
    // A pile whose certificate was removed, or left on the other side of a
    // split, no longer proves nonplanarity: re-attempt it.
    for (int c : {label_[u], label_[v]}) {
      auto it = piles_.find(c);
      if (it == piles_.end()) continue;
      bool certified = false;
      for (const auto& [seq, entry] : it->second) certified |= entry.certificate;
      if (!certified) drain(c);
    }
    refresh_bit(label_[u]);
    refresh_bit(label_[v]);
    return;
  }
  planar_.remove(u, v);
  split_if_disconnected(u, v);
  std::vector<int> comps{label_[u]};
  if (label_[v] != label_[u]) comps.push_back(label_[v]);
  for (int c : comps) {
    // The embedded subgraph lost an edge, so old certificates are void.
    if (auto it = piles_.find(c); it != piles_.end())
      for (auto& [seq, entry] : it->second) entry.certificate = false;
    drain(c);
  }
}

}  // namespace dynplanar
