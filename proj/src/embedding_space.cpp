#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include "dynplanar/blocks.hpp"
#include "dynplanar/potential_oracle.hpp"

namespace dynplanar {

std::vector<DartId> rotation_key(const EmbeddedGraph& g) {
  std::vector<DartId> key(g.dart_capacity());
  for (DartId d = 0; d < g.dart_capacity(); ++d) key[d] = g.dart_alive(d) ? g.rot_next(d) : kNone;
  return key;
}

bool FlipEdge::critical_for(VertexId u, VertexId v) const {
  for (const auto& moved : moved_sets)
    if (std::binary_search(moved.begin(), moved.end(), u) != std::binary_search(moved.begin(), moved.end(), v))
      return true;
  return false;
}

int EmbeddingSpace::find(const EmbeddedGraph& g) const {
  auto it = index.find(rotation_key(g));
  return it == index.end() ? -1 : it->second;
}

const char* dist_kind_name(DistKind kind) {
  switch (kind) {
    case DistKind::Clean: return "clean";
    case DistKind::Sep: return "sep";
    case DistKind::P: return "P";
  }
  return "?";
}

EmbeddingSpace enumerate_embeddings(const EdgeListGraph& g, std::size_t edge_limit) {
  if (g.edges.size() > edge_limit)
    throw Error(ErrorCode::TooLarge, std::to_string(g.edges.size()) + " edges exceeds the enumeration limit");
  EmbeddingSpace space;
  space.graph = g;
  std::vector<std::vector<VertexId>> nbrs(g.n);
  for (auto [a, b] : g.edges) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  // Cyclic orders per vertex: first neighbour fixed, the rest permuted.
  std::vector<std::vector<std::vector<VertexId>>> choices(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    auto& nb = nbrs[v];
    std::sort(nb.begin(), nb.end());
    if (nb.size() <= 2) {
      choices[v].push_back(nb);
      continue;
    }
    std::vector<VertexId> rest(nb.begin() + 1, nb.end());
    do {
      std::vector<VertexId> order{nb[0]};
      order.insert(order.end(), rest.begin(), rest.end());
      choices[v].push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<std::vector<VertexId>> any_order = nbrs;
  for (auto& nb : any_order) std::sort(nb.begin(), nb.end());
  const int components = EmbeddedGraph::from_rotations(any_order, g.edges).component_count();
  std::vector<std::size_t> pick(g.n, 0);
  std::vector<std::vector<VertexId>> rotations(g.n);
  while (true) {
    for (VertexId v = 0; v < g.n; ++v) rotations[v] = choices[v][pick[v]];
    EmbeddedGraph h = EmbeddedGraph::from_rotations(rotations, g.edges);
    if (g.n - h.edge_count() + h.face_count() == 2 * components) {
      space.index.emplace(rotation_key(h), space.size());
      space.nodes.push_back(std::move(h));
    }
    VertexId v = 0;
    while (v < g.n && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == g.n) break;
  }
  return space;
}

std::vector<FlipEdge> enumerate_flips(const EmbeddingSpace& space, int node) {
  const EmbeddedGraph& h = space.nodes[node];
  std::vector<FlipEdge> out;
  std::map<std::tuple<int, FlipKind, bool>, std::size_t> seen;
  auto add = [&](const EmbeddedGraph& after, FlipKind kind, bool clean, FlipDescriptor flip,
                 std::vector<VertexId> moved) {
    const int target = space.find(after);
    if (target < 0 || target == node) return;
    std::sort(moved.begin(), moved.end());
    auto [it, fresh] = seen.emplace(std::tuple{target, kind, clean}, out.size());
    if (fresh) {
      out.push_back({target, kind, clean, std::move(flip), {std::move(moved)}});
      return;
    }
    auto& sets = out[it->second].moved_sets;
    if (std::find(sets.begin(), sets.end(), moved) == sets.end()) sets.push_back(std::move(moved));
  };

  const BlockDecomposition blocks = compute_blocks(h);
  for (VertexId a = 0; a < h.vertex_count(); ++a) {
    if (!blocks.is_cut(a)) continue;
    const std::vector<DartId> darts = h.darts_at(a);
    const int deg = static_cast<int>(darts.size());
    for (int start = 0; start < deg; ++start)
      for (int len = 1; len < deg; ++len) {
        const DartId first = darts[start], last = darts[(start + len - 1) % deg];
        std::vector<char> inside(h.dart_capacity(), 0);
        for (int i = 0; i < len; ++i) inside[darts[(start + i) % deg]] = 1;
        for (DartId target : darts) {
          if (inside[target]) continue;
          for (bool reflect : {false, true}) {
            ArticulationFlip flip{h.corner(first), h.corner(last), h.corner(target), reflect};
            FlipRegion region;
            try {
              region = h.analyze_articulation(flip);
            } catch (const Error&) {
              goto next_segment;
            }
            EmbeddedGraph after = h;
            after.articulation_flip(flip);
            add(after, FlipKind::Articulation, true, flip, region.interior);
          }
        }
      next_segment:;
      }
  }

  for (VertexId s = 0; s < h.vertex_count(); ++s)
    for (VertexId t = 0; t < h.vertex_count(); ++t) {
      if (s == t) continue;
      for (FaceId f1 : h.faces_at(s)) {
        if (!h.vertex_on_face(t, f1)) continue;
        for (FaceId f2 : h.faces_at(s)) {
          if (f2 == f1 || !h.vertex_on_face(t, f2)) continue;
          for (Corner c0 : h.corners_between(s, f1))
            for (Corner c1 : h.corners_between(t, f1))
              for (Corner c2 : h.corners_between(t, f2))
                for (Corner c3 : h.corners_between(s, f2)) {
                  SeparationFlip flip{{c0, c1, c2, c3}};
                  FlipRegion region;
                  try {
                    region = h.analyze_separation(flip);
                  } catch (const Error&) {
                    continue;
                  }
                  const SeparationClassification cls = classify_separation(h, flip);
                  EmbeddedGraph after = h;
                  after.separation_flip(flip);
                  add(after, cls.kind, cls.clean, flip, region.interior);
                }
        }
      }
    }
  return out;
}

void build_flip_graph(EmbeddingSpace& space) {
  space.flips.assign(space.size(), {});
  for (int i = 0; i < space.size(); ++i) space.flips[i] = enumerate_flips(space, i);
}

std::vector<int> distances_to(const EmbeddingSpace& space, DistKind kind, const std::vector<int>& targets) {
  const int n = space.size();
  // Reverse adjacency over clean flips with their weights.
  std::vector<std::vector<std::pair<int, int>>> into(n);
  for (int a = 0; a < n; ++a)
    for (const FlipEdge& e : space.flips[a]) {
      if (!e.clean) continue;
      int w = 1;
      if (kind == DistKind::Sep) w = e.kind == FlipKind::Articulation ? 0 : 1;
      if (kind == DistKind::P) w = e.kind == FlipKind::P ? 1 : 0;
      into[e.target].emplace_back(a, w);
    }
  std::vector<int> dist(n, kUnreachable);
  std::deque<int> queue;
  for (int t : targets) {
    dist[t] = 0;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (auto [y, w] : into[x]) {
      if (dist[x] + w >= dist[y]) continue;
      dist[y] = dist[x] + w;
      if (w == 0) queue.push_front(y);
      else queue.push_back(y);
    }
  }
  return dist;
}

int dist(const EmbeddingSpace& space, DistKind kind, int from, const std::vector<int>& targets) {
  return distances_to(space, kind, targets)[from];
}

std::vector<int> embeddings_admitting(const EmbeddingSpace& space, VertexId x, VertexId y) {
  std::vector<int> out;
  for (int i = 0; i < space.size(); ++i) {
    const EmbeddedGraph& h = space.nodes[i];
    bool ok = h.component_of(x) != h.component_of(y);
    if (!ok)
      for (FaceId f : h.faces_at(x))
        if (h.vertex_on_face(y, f)) {
          ok = true;
          break;
        }
    if (ok) out.push_back(i);
  }
  return out;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BoostGraph to_boost(const EdgeListGraph& g) {
  BoostGraph b(g.n);
  for (auto [x, y] : g.edges) boost::add_edge(x, y, b);
  return b;
}

std::vector<int> degree_signature(const EdgeListGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [x, y] : g.edges) ++deg[x], ++deg[y];
  std::sort(deg.begin(), deg.end());
  deg.push_back(g.n);
  return deg;
}

}  // namespace

std::vector<EdgeListGraph> connected_graphs(int max_edges) {
  std::vector<EdgeListGraph> all;
  if (max_edges < 1) return all;
  std::vector<EdgeListGraph> layer{EdgeListGraph{2, {{0, 1}}}};
  for (int m = 1;; ++m) {
    all.insert(all.end(), layer.begin(), layer.end());
    if (m == max_edges) break;
    std::map<std::vector<int>, std::vector<EdgeListGraph>> buckets;
    std::vector<EdgeListGraph> next;
    auto offer = [&](EdgeListGraph h) {
      std::sort(h.edges.begin(), h.edges.end());
      auto& bucket = buckets[degree_signature(h)];
      const BoostGraph bh = to_boost(h);
      for (const EdgeListGraph& other : bucket)
        if (boost::isomorphism(bh, to_boost(other))) return;
      bucket.push_back(h);
      next.push_back(std::move(h));
    };
    for (const EdgeListGraph& g : layer) {
      std::set<std::pair<VertexId, VertexId>> present(g.edges.begin(), g.edges.end());
      for (VertexId a = 0; a < g.n; ++a)
        for (VertexId b = a + 1; b < g.n; ++b)
          if (!present.count({a, b})) {
            EdgeListGraph h = g;
            h.edges.emplace_back(a, b);
            offer(std::move(h));
          }
      for (VertexId a = 0; a < g.n; ++a) {
        EdgeListGraph h = g;
        h.edges.emplace_back(a, g.n);
        ++h.n;
        offer(std::move(h));
      }
    }
    layer = std::move(next);
  }
  return all;
}

}  // namespace dynplanar
