#include <gtest/gtest.h>

#include <random>

#include "dynplanar/flip_search.hpp"
#include "dynplanar/potential_oracle.hpp"
#include "dynplanar/static_oracle.hpp"
#include "support/test_support.hpp"

namespace dynplanar {
namespace {

using ::dynplanar::testing::cofacial_scan;
using ::dynplanar::testing::cube_embedding;
using ::dynplanar::testing::random_embedding;

// Hubs 0 and 1, paths through 2..5 in that cyclic order: 2 and 4 sit opposite.
EmbeddedGraph k2_4_in_order() {
  return EmbeddedGraph::from_rotations({{2, 3, 4, 5}, {5, 4, 3, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
                                       named::k2_4().edges);
}

// Two nested P nodes: {0,1} with branches 2, 3, the {4,5} gadget, 9; and
// {4,5} with branches back to {0,1}, 6, 8, 7, 10. Linking 2 with 8 needs one
// flip at each pair.
EmbeddedGraph nested_k2_4() {
  std::vector<std::vector<VertexId>> rot(11);
  rot[0] = {2, 3, 4, 9};
  rot[1] = {9, 5, 3, 2};
  rot[2] = rot[3] = rot[9] = {0, 1};
  rot[4] = {0, 6, 8, 7, 10};
  rot[5] = {10, 7, 8, 6, 1};
  rot[6] = rot[7] = rot[8] = rot[10] = {4, 5};
  return EmbeddedGraph::from_rotations(rot);
}

struct Harness {
  EmbeddedGraph g;
  TreeCotreeIndex index;
  FlipSearch search;
  explicit Harness(EmbeddedGraph h) : g(std::move(h)), index(g), search(g, index) {}
};

TEST(FlipSearch, K2_4OppositePathsNeedOnePFlip) {
  Harness h(k2_4_in_order());
  ASSERT_EQ(h.g.face_count(), 4);
  ASSERT_FALSE(cofacial_scan(h.g, 2, 4));
  EXPECT_TRUE(h.search.multi_flip_linkable(2, 4));
  ASSERT_EQ(h.search.log().size(), 1u);
  EXPECT_EQ(h.search.log()[0].kind, FlipKind::P);
  EXPECT_TRUE(h.search.log()[0].critical);
  EXPECT_TRUE(h.search.log()[0].clean);
  EXPECT_TRUE(cofacial_scan(h.g, 2, 4));
  EXPECT_TRUE(h.g.validate().ok());
}

TEST(FlipSearch, CubeAntipodalPairIsRejectedWithoutFlips) {
  Harness h(cube_embedding());
  EXPECT_FALSE(h.search.multi_flip_linkable(0, 7));
  EXPECT_TRUE(h.search.log().empty());
  EXPECT_FALSE(h.search.do_separation_flips(0, 7));
  EXPECT_EQ(h.search.find_first_separation_flip(0, 7).size, 0u);
  EXPECT_TRUE(enumerate_u_flips(h.g, 0, 7).empty());
}

TEST(FlipSearch, NestedPNodesNeedTwoGrowingFlips) {
  Harness h(nested_k2_4());
  ASSERT_EQ(h.g.face_count(), 7);
  ASSERT_FALSE(cofacial_scan(h.g, 2, 8));
  EXPECT_TRUE(h.search.do_separation_flips(2, 8));
  const auto& log = h.search.log();
  ASSERT_EQ(log.size(), 2u);
  EXPECT_LT(log[0].moved_size, log[1].moved_size);
  for (const FlipRecord& r : log) {
    EXPECT_EQ(r.kind, FlipKind::P);
    EXPECT_TRUE(r.critical);
  }
  EXPECT_TRUE(cofacial_scan(h.g, 2, 8));
}

TEST(FlipSearch, Chain3NeedsAtMostTwoArticulationFlips) {
  EmbeddingSpace space = enumerate_embeddings(named::chain3());
  int exercised = 0;
  for (const EmbeddedGraph& start : space.nodes) {
    if (cofacial_scan(start, 0, 6)) continue;
    ++exercised;
    Harness h(start);
    EXPECT_TRUE(h.search.multi_flip_linkable(0, 6));
    EXPECT_LE(h.search.log().size(), 2u);
    for (const FlipRecord& r : h.search.log()) {
      EXPECT_EQ(r.kind, FlipKind::Articulation);
      EXPECT_TRUE(r.critical);
    }
    EXPECT_TRUE(cofacial_scan(h.g, 0, 6));
  }
  EXPECT_GT(exercised, 0);
}

TEST(FlipSearch, BoundingFaceOfBowtieCenter) {
  Harness h(EmbeddedGraph::from_rotations(*find_embedding_static(named::bowtie()), named::bowtie().edges));
  const BoundingFace bf = h.search.find_bounding_face(1, 0, 3);
  EXPECT_TRUE(h.g.vertex_on_face(0, bf.face));
  EXPECT_EQ(bf.left.vertex, 0);
  EXPECT_EQ(bf.right.vertex, 0);
  EXPECT_EQ(h.g.face_of(bf.left), bf.face);
  EXPECT_EQ(h.g.face_of(bf.right), bf.face);
  EXPECT_NE(bf.left.dart, bf.right.dart);
}

TEST(FlipSearch, BoundingFaceNeedsAnArticulation) {
  Harness h(EmbeddedGraph::from_rotations(*find_embedding_static(named::k4()), named::k4().edges));
  try {
    h.search.find_bounding_face(0, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSuchFace);
  }
}

TEST(FlipSearch, NextFlipBlockSkipsFavourableChain) {
  // Chain3 greedily embedded: every triangle on the outer face.
  EmbeddedGraph g = EmbeddedGraph::from_rotations(*find_embedding_static(named::chain3()), named::chain3().edges);
  Harness h(g);
  if (cofacial_scan(h.g, 0, 6)) {
    EXPECT_EQ(h.search.find_next_flip_block(0, 0, 2, 6), 6);
  }
  // With one block between the endpoints the loop guard returns v' itself.
  EXPECT_EQ(h.search.find_next_flip_block(0, 0, 1, 1), 1);
}

TEST(FlipSearch, ArticulationFlipsNothingToDoWhenCofacial) {
  Harness h(EmbeddedGraph::from_rotations(*find_embedding_static(named::bowtie()), named::bowtie().edges));
  ASSERT_TRUE(cofacial_scan(h.g, 1, 3));
  h.search.do_articulation_flips(1, 1, 0, 3);
  EXPECT_TRUE(h.search.log().empty());
}

TEST(FlipSearch, K2_4FindFirstMatchesBruteForceMaximum) {
  Harness h(k2_4_in_order());
  const auto all = enumerate_u_flips(h.g, 2, 4);
  ASSERT_FALSE(all.empty());
  const SepFlipResult first = h.search.find_first_separation_flip(2, 4);
  ASSERT_TRUE(first.sigma.has_value());
  EXPECT_EQ(first.size, all.front().size);
  EXPECT_TRUE(h.search.is_locally_maximal(*first.sigma, 2, 4));
  const FaceId fu = h.g.face_of(first.sigma->sigma[0]), fv = h.g.face_of(first.sigma->sigma[3]);
  EXPECT_EQ(h.search.choose_best_flip(2, 4, fu, fv).size, first.size);
  EXPECT_EQ(h.search.choose_best_flip(2, 4, fu, fu).size, 0u);
  bool seen = false;
  for (const CandidateTuple& c : h.search.find_single_flip_candidates(2, 4)) seen |= c.f_u == fu && c.f_v == fv;
  EXPECT_TRUE(seen);
}

TEST(FlipSearch, LocallyMaximalRejectsSmallerAndWrongSide) {
  Harness h(nested_k2_4());
  const auto all = enumerate_u_flips(h.g, 2, 8);
  ASSERT_GE(all.size(), 2u);
  EXPECT_TRUE(h.search.is_locally_maximal(*all.front().sigma, 2, 8));
  // Swap the roles of u and v: u no longer lies on the first face.
  EXPECT_FALSE(h.search.is_locally_maximal(complement(*all.front().sigma), 2, 8));
  // A strictly smaller u-flip on the same pair of faces is not maximal.
  const SeparationFlip& best = *all.front().sigma;
  for (const SepFlipResult& r : all) {
    if (r.size >= all.front().size) continue;
    if (h.g.face_of(r.sigma->sigma[0]) == h.g.face_of(best.sigma[0]) &&
        h.g.face_of(r.sigma->sigma[3]) == h.g.face_of(best.sigma[3])) {
      EXPECT_FALSE(h.search.is_locally_maximal(*r.sigma, 2, 8));
    }
  }
}

TEST(FlipSearch, ChooseBestRejectsFacesWithVOnUSide) {
  Harness h(k2_4_in_order());
  // Faces around vertex 4 only: u = 2 is on neither.
  const auto faces = h.g.faces_at(4);
  EXPECT_EQ(h.search.choose_best_flip(2, 4, faces[0], faces[1]).size, 0u);
}

TEST(FlipSearch, SepCaseGuardWhenProjectionsCoincide) {
  Harness h(k2_4_in_order());
  for (const CandidateTuple& c : h.search.find_single_flip_candidates(2, 4)) {
    const VertexId w = c.cycle.vertices.front();
    for (SepCase tag : {SepCase::P11, SepCase::P10, SepCase::P0x, SepCase::R11})
      EXPECT_EQ(h.search.find_sep_case(tag, 2, 4, c.f_u, c.cycle, c.e_u, c.e_v, w, w).size, 0u);
  }
}

// Every graph with at most seven edges, every embedding and every non-edge:
// the answer matches the static oracle and every flip is critical.
TEST(FlipSearch, ExhaustiveSmallGraphsAgreeWithOracle) {
  long checked = 0;
  for (const EdgeListGraph& g : connected_graphs(7)) {
    if (!is_planar_static(g)) continue;
    const EmbeddingSpace space = enumerate_embeddings(g);
    for (VertexId u = 0; u < g.n; ++u)
      for (VertexId v = u + 1; v < g.n; ++v) {
        if (space.nodes[0].find_edge(u, v) != kNone) continue;
        EdgeListGraph plus = g;
        plus.edges.emplace_back(u, v);
        const bool planar = is_planar_static(plus);
        for (const EmbeddedGraph& start : space.nodes) {
          Harness h(start);
          ASSERT_EQ(h.search.multi_flip_linkable(u, v), planar);
          for (const FlipRecord& r : h.search.log()) ASSERT_TRUE(r.critical);
          ASSERT_TRUE(h.g.validate().ok());
          ++checked;
        }
      }
  }
  EXPECT_GT(checked, 10000);
}

TEST(FlipSearch, RandomGraphsAgreeWithOracleAndBoundCandidates) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Harness h(random_embedding(14, 40, rng));
    for (int q = 0; q < 15; ++q) {
      VertexId u = static_cast<VertexId>(rng() % 14), v = static_cast<VertexId>(rng() % 14);
      if (u == v || h.g.find_edge(u, v) != kNone || h.g.component_of(u) != h.g.component_of(v)) continue;
      EdgeListGraph plus{14, {}};
      for (EdgeId e : h.g.edges()) plus.edges.push_back(h.g.endpoints(e));
      plus.edges.emplace_back(u, v);
      h.search.clear_log();
      EXPECT_EQ(h.search.multi_flip_linkable(u, v), is_planar_static(plus));
      for (const FlipRecord& r : h.search.log()) EXPECT_TRUE(r.critical);
    }
  }
  EXPECT_LE(candidate_stats().largest, kMaxCandidates);
}

TEST(FlipSearch, BudgetGuardFires) {
  Harness h(nested_k2_4());
  h.search.set_flip_budget(1);
  try {
    h.search.multi_flip_linkable(2, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FlipBudgetExceeded);
  }
}

TEST(FlipSearch, ClassificationOfK2_4Flips) {
  EmbeddedGraph g = k2_4_in_order();
  const auto all = enumerate_u_flips(g, 2, 4);
  ASSERT_FALSE(all.empty());
  const SeparationClassification cls = classify_separation(g, *all.front().sigma);
  EXPECT_EQ(cls.kind, FlipKind::P);
  EXPECT_TRUE(cls.clean);
}

}  // namespace
}  // namespace dynplanar
