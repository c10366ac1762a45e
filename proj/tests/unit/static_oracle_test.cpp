#include <gtest/gtest.h>

#include <random>

#include "dynplanar/edge_list.hpp"
#include "dynplanar/embedded_graph.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {
namespace {

TEST(StaticOracle, KuratowskiGraphsAreNonplanar) {
  EXPECT_FALSE(is_planar_static(named::k5()));
  EXPECT_FALSE(is_planar_static(named::k33()));
  EXPECT_FALSE(find_embedding_static(named::k5()).has_value());
}

TEST(StaticOracle, K5MinusAnyEdgeIsPlanar) {
  auto k5 = named::k5();
  for (std::size_t drop = 0; drop < k5.edges.size(); ++drop) {
    EdgeListGraph g{5, {}};
    for (std::size_t i = 0; i < k5.edges.size(); ++i)
      if (i != drop) g.edges.push_back(k5.edges[i]);
    EXPECT_TRUE(is_planar_static(g));
    EXPECT_TRUE(is_planar_by_enumeration(g));
  }
}

TEST(StaticOracle, EmbeddingsValidate) {
  for (const char* name : {"TRI", "K4", "CUBE", "K2_4", "CHAIN3", "BOWTIE"}) {
    auto rot = find_embedding_static(named::by_name(name));
    ASSERT_TRUE(rot.has_value()) << name;
    EmbeddedGraph g = EmbeddedGraph::from_rotations(*rot);
    EXPECT_TRUE(g.validate().ok()) << name;
    EXPECT_EQ(g.edge_count(), static_cast<int>(named::by_name(name).edges.size()));
  }
}

TEST(StaticOracle, TriangleEmbeddingHasTwoFaces) {
  EmbeddedGraph g = EmbeddedGraph::from_rotations(*find_embedding_static(named::tri()));
  EXPECT_EQ(g.face_count(), 2);
}

TEST(StaticOracle, EdgeBoundShortCircuitAgrees) {
  // 3n-6 = 6 for n = 4; K4 sits exactly on the bound.
  EXPECT_TRUE(is_planar_static(named::k4()));
  EXPECT_FALSE(is_planar_static(named::k5()));
}

// Every edge subset of K6 with at most 9 edges; is_planar_static throws if
// Boyer-Myrvold and the enumeration disagree.
TEST(StaticOracle, AgreesWithEnumerationOnSubgraphsOfK6) {
  std::vector<std::pair<VertexId, VertexId>> all;
  for (VertexId a = 0; a < 6; ++a)
    for (VertexId b = a + 1; b < 6; ++b) all.emplace_back(a, b);
  int checked = 0, planar = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) > kEnumerationEdgeLimit) continue;
    EdgeListGraph g{6, {}};
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) g.edges.push_back(all[i]);
    ASSERT_NO_THROW(planar += is_planar_static(g));
    ++checked;
  }
  EXPECT_EQ(checked, 27824);
  EXPECT_GT(planar, 0);
  EXPECT_LT(planar, checked);
}

TEST(StaticOracle, AgreesWithEnumerationOnRandomSparseGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    EdgeListGraph g{n, {}};
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 9));
    g.edges = all;
    EXPECT_EQ(is_planar_static(g), is_planar_by_enumeration(g));
  }
}

}  // namespace
}  // namespace dynplanar
