#include <gtest/gtest.h>

#include <random>

#include "dynplanar/general_dynamic.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {
namespace {

void insert_all(GeneralDynamicGraph& g, const EdgeListGraph& el, int offset = 0) {
  for (auto [a, b] : el.edges) g.insert(a + offset, b + offset);
}

void expect_matches_oracle(const GeneralDynamicGraph& g) {
  const EdgeListGraph full{g.vertex_count(), g.all_edges()};
  const std::vector<bool> comp = component_planarity_static(full);
  EXPECT_EQ(g.is_planar(), is_planar_static(full));
  for (VertexId w = 0; w < g.vertex_count(); ++w) EXPECT_EQ(g.component_planar(w), comp[w]) << "vertex " << w;
}

TEST(GeneralDynamic, EmptyGraphIsPlanar) {
  GeneralDynamicGraph g(3);
  EXPECT_TRUE(g.is_planar());
  EXPECT_TRUE(g.component_planar(2));
}

TEST(GeneralDynamic, K5DefersExactlyOneEdge) {
  GeneralDynamicGraph g(5);
  insert_all(g, named::k5());
  EXPECT_FALSE(g.is_planar());
  EXPECT_FALSE(g.component_planar(0));
  EXPECT_EQ(g.planar().edge_count(), 9);
  EXPECT_EQ(g.deferred_count(), 1u);
  EXPECT_EQ(g.deferrals(), 1u);
}

TEST(GeneralDynamic, K5DeletingAnEmbeddedEdgeDrainsThePile) {
  for (auto [a, b] : named::k5().edges) {
    GeneralDynamicGraph g(5);
    insert_all(g, named::k5());
    if (g.is_deferred(a, b)) continue;
    g.remove(a, b);
    EXPECT_TRUE(g.is_planar());
    EXPECT_EQ(g.planar().edge_count(), 9);
    EXPECT_EQ(g.deferred_count(), 0u);
  }
}

TEST(GeneralDynamic, K33DeleteOneEdgeRestoresPlanarity) {
  GeneralDynamicGraph g(6);
  insert_all(g, named::k33());
  EXPECT_FALSE(g.is_planar());
  EXPECT_EQ(g.deferred_count(), 1u);
  auto [a, b] = named::k33().edges.front();
  g.remove(a, b);
  EXPECT_TRUE(g.is_planar());
}

TEST(GeneralDynamic, DeletingTheDeferredEdgeRestoresPlanarity) {
  GeneralDynamicGraph g(5);
  insert_all(g, named::k5());
  const auto pile = g.pile_of(0);
  ASSERT_EQ(pile.size(), 1u);
  g.remove(pile[0].first, pile[0].second);
  EXPECT_TRUE(g.is_planar());
}

TEST(GeneralDynamic, PerComponentBitsWithDisjointPlanarComponent) {
  GeneralDynamicGraph g(9);
  insert_all(g, named::k5());
  insert_all(g, named::k4(), 5);
  EXPECT_FALSE(g.is_planar());
  EXPECT_FALSE(g.component_planar(3));
  EXPECT_TRUE(g.component_planar(6));
  expect_matches_oracle(g);
}

TEST(GeneralDynamic, NonplanarComponentDefersWithoutSearch) {
  GeneralDynamicGraph g(7);
  insert_all(g, named::k5());
  const std::uint64_t attempts = g.planar().ops().inserts;
  g.insert(0, 5);
  EXPECT_EQ(g.planar().ops().inserts, attempts);
  EXPECT_TRUE(g.is_deferred(0, 5));
  EXPECT_FALSE(g.component_planar(5));
  EXPECT_TRUE(g.component_planar(6));
}

TEST(GeneralDynamic, BridgeSplitSeparatesBits) {
  // K5 on 0..4, a triangle on 5..7, joined by the bridge 4-5 while K5 is
  // already nonplanar (so the bridge itself is deferred).
  GeneralDynamicGraph g(8);
  insert_all(g, named::tri(), 5);
  insert_all(g, named::k5());
  g.insert(4, 5);
  EXPECT_FALSE(g.component_planar(6));
  g.remove(4, 5);
  EXPECT_FALSE(g.component_planar(0));
  EXPECT_TRUE(g.component_planar(6));
  expect_matches_oracle(g);
}

TEST(GeneralDynamic, Errors) {
  GeneralDynamicGraph g(3);
  g.insert(0, 1);
  EXPECT_THROW(g.insert(0, 1), Error);
  EXPECT_THROW(g.insert(1, 1), Error);
  EXPECT_THROW(g.remove(0, 2), Error);
}

TEST(GeneralDynamic, RandomChurnAgreesWithOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 6 + trial % 5;
    GeneralDynamicGraph g(n);
    for (int step = 0; step < 150; ++step) {
      VertexId a = static_cast<VertexId>(rng() % n), b = static_cast<VertexId>(rng() % n);
      if (a == b) continue;
      if (g.has_edge(a, b)) {
        if (rng() % 3 == 0) g.remove(a, b);
      } else {
        g.insert(a, b);
      }
      expect_matches_oracle(g);
      if (::testing::Test::HasFailure()) return;
    }
  }
}

}  // namespace
}  // namespace dynplanar
