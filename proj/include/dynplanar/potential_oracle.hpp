#pragma once

#include <climits>
#include <memory>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dynplanar/decomposition.hpp"
#include "dynplanar/edge_list.hpp"
#include "dynplanar/embedded_graph.hpp"
#include "dynplanar/flip_search.hpp"

namespace dynplanar {

inline constexpr int kUnreachable = INT_MAX;
inline constexpr std::size_t kDefaultEmbeddingEdgeLimit = 9;

struct FlipEdge {
  int target = -1;
  FlipKind kind = FlipKind::Articulation;
  bool clean = true;
  FlipDescriptor flip;
  // For every distinct descriptor reaching `target` with this label: the
  // vertices strictly inside its moved side, sorted.
  std::vector<std::vector<VertexId>> moved_sets;

  // Exactly one of u, v strictly inside the moved side, for some descriptor.
  bool critical_for(VertexId u, VertexId v) const;
};

// All genus-0 rotation systems of a small graph, with edge i of the graph
// numbered i in every node, and (once built) the flip adjacency between them.
struct EmbeddingSpace {
  EdgeListGraph graph;
  std::vector<EmbeddedGraph> nodes;
  std::vector<std::vector<FlipEdge>> flips;
  std::map<std::vector<DartId>, int> index;

  int size() const { return static_cast<int>(nodes.size()); }
  // Node holding the same rotation system as g, or -1.
  int find(const EmbeddedGraph& g) const;
};

std::vector<DartId> rotation_key(const EmbeddedGraph& g);

EmbeddingSpace enumerate_embeddings(const EdgeListGraph& g, std::size_t edge_limit = kDefaultEmbeddingEdgeLimit);
// Every articulation and separation flip out of one node, deduplicated by
// result and label.
std::vector<FlipEdge> enumerate_flips(const EmbeddingSpace& space, int node);
void build_flip_graph(EmbeddingSpace& space);

enum class DistKind { Clean, Sep, P };
const char* dist_kind_name(DistKind kind);

// Distance from every node to the nearest target over clean flips: plain
// BFS for Clean, 0/1 weights for Sep and P. kUnreachable when cut off.
std::vector<int> distances_to(const EmbeddingSpace& space, DistKind kind, const std::vector<int>& targets);
int dist(const EmbeddingSpace& space, DistKind kind, int from, const std::vector<int>& targets);

// Emb(G; x, y): nodes where x and y share a face (or lie in different components).
std::vector<int> embeddings_admitting(const EmbeddingSpace& space, VertexId x, VertexId y);

// Connected simple graphs with 1..max_edges edges, one per isomorphism class,
// in order of edge count. Vertices are 0..n-1 with no isolated ones.
std::vector<EdgeListGraph> connected_graphs(int max_edges);

using VertexPair = std::pair<VertexId, VertexId>;  // stored with first < second

// Edges that could be added to G without breaking planarity, chosen along
// the solid paths of the pre-split decomposition for (u, v).
struct StrutSet {
  std::set<VertexPair> critical;
  std::set<VertexPair> off_critical;

  std::set<VertexPair> solid() const;
};

// When (u,v) is already an edge, the decomposition is that of G - (u,v) with
// its critical path contracted: no critical struts, same off-critical ones.
StrutSet struts(const EdgeListGraph& g, VertexId u, VertexId v);
// Struts read directly off a decomposition; `paths` must be for a pair that
// is not an edge of g.
StrutSet struts(const EdgeListGraph& g, const SolidPathSet& paths);

enum class CostWhich { Critical, Solid };

struct CostVector {
  int clean = 0;
  int sep = 0;
  int p = 0;

  int get(DistKind kind) const;
  bool operator==(const CostVector&) const = default;
};

// Per-strut distance tables over one embedding space, shared across (u, v).
class CostEvaluator {
 public:
  explicit CostEvaluator(const EmbeddingSpace& space);

  // dist(kind, node, Emb(G; x, y)) for every node.
  const std::vector<int>& strut_distances(VertexPair strut, DistKind kind);
  // Sum over the struts; throws InfiniteCost when one is unreachable.
  int cost(const std::set<VertexPair>& strut_set, DistKind kind, int node);
  CostVector costs(const std::set<VertexPair>& strut_set, int node);

 private:
  const EmbeddingSpace& space_;
  std::map<std::pair<VertexPair, DistKind>, std::vector<int>> cache_;
};

// Convenience form: builds the flip graph of H's space if needed.
int cost(EmbeddingSpace& space, DistKind kind, int node, VertexId u, VertexId v, CostWhich which);

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;  // first failure only

  bool ok() const { return failures == 0; }
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  // Recorded, never asserted: the largest distance from a good embedding of
  // G to the good embeddings for a particular pair.
  int good_embedding_max_dist = 0;
  std::uint64_t pairs = 0;

  bool ok() const;
  PropertyResult& at(const std::string& name);
  const PropertyResult* find(const std::string& name) const;
  void merge(const PropertyReport& other);
  std::string summary() const;
};

// Property names, in report order.
std::vector<std::string> property_names();

struct PropertyOptions {
  bool check_insert_consistency = true;  // builds the space of G + (u,v)
  bool check_dirty_decomposition = true;
};

// Exhaustive checker over one small graph: every embedding, every flip.
class PropertyChecker {
 public:
  explicit PropertyChecker(const EdgeListGraph& g, PropertyOptions options = {});

  void check_pair(VertexId u, VertexId v, PropertyReport& report);
  // Every ordered pair of distinct vertices, then the recorded distances.
  void check_all_pairs(PropertyReport& report);
  const EmbeddingSpace& space() const { return space_; }

 private:
  struct Inserted;
  const Inserted& inserted(VertexId u, VertexId v);
  bool planar_with(VertexId x, VertexId y);
  std::string describe(int node) const;

  EdgeListGraph g_;
  PropertyOptions options_;
  EmbeddingSpace space_;
  CostEvaluator evaluator_;
  std::map<VertexPair, bool> planar_cache_;
  std::map<VertexPair, std::shared_ptr<Inserted>> inserted_;
  // Good embeddings per pair, kept for the recorded distance check.
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> good_;
};

// The strut-only properties (planarity, subset, existing edge, admissible
// and both nonadmissible cases) for one pair. No embeddings are enumerated,
// so this runs on graphs of any size; cost properties are not touched.
void check_strut_structure(const EdgeListGraph& g, VertexId u, VertexId v, PropertyReport& report);

PropertyReport check_properties(const EdgeListGraph& g, VertexId u, VertexId v, PropertyOptions options = {});

}  // namespace dynplanar
