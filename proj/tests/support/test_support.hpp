#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "dynplanar/edge_list.hpp"
#include "dynplanar/embedded_graph.hpp"

namespace dynplanar::testing {

// Naive face scan: does any face orbit contain both u and v?
inline bool cofacial_scan(const EmbeddedGraph& g, VertexId u, VertexId v) {
  for (FaceId f = 0; f < g.face_count(); ++f) {
    bool hu = false, hv = false;
    for (Corner c : g.face_corners(f)) {
      hu |= c.vertex == u;
      hv |= c.vertex == v;
    }
    if (hu && hv) return true;
  }
  return false;
}

// Inserts edges in order, each into the first face shared by its endpoints.
inline EmbeddedGraph embed_greedily(const EdgeListGraph& el) {
  EmbeddedGraph g(el.n);
  for (auto [a, b] : el.edges) {
    bool done = false;
    for (Corner ca : g.corners_at(a)) {
      for (Corner cb : g.corners_at(b)) {
        if (g.component_of(a) != g.component_of(b) || g.face_of(ca) == g.face_of(cb)) {
          g.insert_edge_at(ca, cb);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done) throw std::runtime_error("embed_greedily: no shared face");
  }
  return g;
}

// Planar cube: outer square 0-1-3-2 around inner square 4-5-7-6.
inline EmbeddedGraph cube_embedding() {
  return EmbeddedGraph::from_rotations(
      {{1, 4, 2}, {3, 5, 0}, {3, 0, 6}, {2, 7, 1}, {5, 6, 0}, {7, 4, 1}, {7, 2, 4}, {3, 6, 5}});
}

// Grows a random embedded planar graph: each attempt picks a random vertex
// pair and, if they share a face (or lie in different components), links
// them through a random pair of corners on a shared face.
inline EmbeddedGraph random_embedding(int n, int attempts, std::mt19937& rng) {
  EmbeddedGraph g(n);
  for (int i = 0; i < attempts; ++i) {
    VertexId a = static_cast<VertexId>(rng() % n), b = static_cast<VertexId>(rng() % n);
    if (a == b || g.find_edge(a, b) != kNone) continue;
    std::vector<std::pair<Corner, Corner>> options;
    bool split = g.component_of(a) != g.component_of(b);
    for (Corner ca : g.corners_at(a))
      for (Corner cb : g.corners_at(b))
        if (split || g.face_of(ca) == g.face_of(cb)) options.emplace_back(ca, cb);
    if (options.empty()) continue;
    auto [ca, cb] = options[rng() % options.size()];
    g.insert_edge_at(ca, cb);
  }
  return g;
}

inline DartId dart_between(const EmbeddedGraph& g, VertexId from, VertexId to) {
  for (DartId d : g.darts_at(from))
    if (g.head(d) == to) return d;
  throw std::runtime_error("dart_between: no such dart");
}

inline std::multiset<int> face_degrees(const EmbeddedGraph& g) {
  std::multiset<int> out;
  for (FaceId f = 0; f < g.face_count(); ++f) out.insert(static_cast<int>(g.face_corners(f).size()));
  return out;
}

}  // namespace dynplanar::testing
