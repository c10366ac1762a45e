#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dynplanar/embedded_graph.hpp"
#include "dynplanar/tree_cotree.hpp"

namespace dynplanar {

enum class FlipKind { Articulation, SR, P };
const char* flip_kind_name(FlipKind kind);

// One executed flip. Separation flips are stored oriented so that the
// reflected side is the one holding the first endpoint of the pair being linked.
struct FlipRecord {
  FlipDescriptor flip;
  FlipKind kind = FlipKind::Articulation;
  bool clean = true;
  bool critical = false;
  std::size_t moved_size = 0;  // edges + vertices of the moved side, poles included
};

struct CandidateTuple {
  FaceId f_u = kNone;
  FaceId f_v = kNone;
  CycleHandle cycle;
  EdgeId e_u = kNone;
  EdgeId e_v = kNone;
};

// size counts edges + vertices of the u-side, poles included; 0 iff no flip.
struct SepFlipResult {
  std::size_t size = 0;
  std::optional<SeparationFlip> sigma;
};

enum class SepCase { P11, R11, P10, R10, P0x, R01 };

struct BoundingFace {
  FaceId face = kNone;
  Corner left;
  Corner right;
};

// Process-wide counters over every candidate computation, so that the
// twenty-tuple bound can be reported after long runs.
struct CandidateStats {
  std::uint64_t calls = 0;
  std::size_t largest = 0;
};
CandidateStats& candidate_stats();
inline constexpr std::size_t kMaxCandidates = 20;

class FlipSearch {
 public:
  FlipSearch(EmbeddedGraph& g, TreeCotreeIndex& index);

  // Flips allowed per top-level call before FlipBudgetExceeded; 0 = unlimited.
  void set_flip_budget(std::size_t budget) { budget_ = budget; }

  // Performs flips until u and v share a face; false means G + (u,v) is
  // nonplanar (flips already made are kept).
  bool multi_flip_linkable(VertexId u, VertexId v);

  BoundingFace find_bounding_face(VertexId u, VertexId a, VertexId v) const;
  VertexId find_next_flip_block(VertexId u, VertexId u1, VertexId v1, VertexId v) const;
  void do_articulation_flips(VertexId u, VertexId u1, VertexId v1, VertexId v);
  bool do_separation_flips(VertexId u, VertexId v);

  std::vector<CandidateTuple> find_single_flip_candidates(VertexId u, VertexId v) const;
  bool is_locally_maximal(const SeparationFlip& sigma, VertexId u, VertexId v) const;
  SepFlipResult choose_best_flip(VertexId u, VertexId v, FaceId f_u, FaceId f_v) const;
  SepFlipResult find_sep_case(SepCase tag, VertexId u, VertexId v, FaceId f_u, const CycleHandle& cycle,
                              EdgeId e_u, EdgeId e_v, VertexId x, VertexId y) const;
  SepFlipResult find_first_separation_flip(VertexId u, VertexId v) const;

  const std::vector<FlipRecord>& log() const { return log_; }
  void clear_log() { log_.clear(); }

 private:
  class PairScope;

  SepFlipResult choose_best_uncached(VertexId u, VertexId v, FaceId f_u, FaceId f_v) const;
  void execute_separation(const SeparationFlip& sigma, VertexId u);
  void move_articulation_side(VertexId a, Corner c1, Corner c2, VertexId toward, const std::vector<Corner>& targets);
  // preferred first, then every corner of a on a face shared with other.
  std::vector<Corner> corners_toward(VertexId a, VertexId other, Corner preferred) const;
  void record(FlipRecord rec);
  std::pair<FlipRegion, FlipRegion> sides(const SeparationFlip& sigma) const;

  EmbeddedGraph& g_;
  TreeCotreeIndex& index_;
  std::size_t budget_ = 0;
  std::size_t flips_this_call_ = 0;
  int depth_ = 0;
  VertexId pair_u_ = kNone;
  VertexId pair_v_ = kNone;
  std::vector<FlipRecord> log_;
  // choose_best_flip is a pure function of the embedding; the case analysis
  // asks for the same face pairs repeatedly.
  mutable std::uint64_t best_cache_version_ = ~std::uint64_t{0};
  mutable std::map<std::array<std::int32_t, 4>, SepFlipResult> best_cache_;
};

// The complementary side of a separation 4-cycle.
SeparationFlip complement(const SeparationFlip& sigma);

// Every u-flip by brute force over face pairs and corner choices, each
// oriented so that the described side is the one holding u. Slow; meant for
// tests and oracles on small graphs.
std::vector<SepFlipResult> enumerate_u_flips(const EmbeddedGraph& g, VertexId u, VertexId v);

// P versus SR and cleanliness of a separation flip, from the separation
// classes of the block holding both poles.
struct SeparationClassification {
  FlipKind kind = FlipKind::SR;
  bool clean = false;
};
SeparationClassification classify_separation(const EmbeddedGraph& g, const SeparationFlip& sigma);

}  // namespace dynplanar
