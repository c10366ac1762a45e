#include <gtest/gtest.h>

#include <random>

#include "dynplanar/blocks.hpp"
#include "support/test_support.hpp"

namespace dynplanar {
namespace {

using ::dynplanar::testing::random_embedding;

TEST(Blocks, Chain3HasThreeTrianglesAndTwoCuts) {
  const BlockDecomposition b = compute_blocks(named::chain3());
  EXPECT_EQ(b.block_count(), 3);
  for (VertexId v = 0; v < 7; ++v) EXPECT_EQ(b.is_cut(v), v == 2 || v == 4) << v;
  EXPECT_EQ(b.cut_vertices_between(0, 6), (std::vector<VertexId>{2, 4}));
  EXPECT_EQ(b.cut_vertices_between(6, 1), (std::vector<VertexId>{4, 2}));
  EXPECT_EQ(b.cut_vertices_between(2, 6), (std::vector<VertexId>{4}));
  EXPECT_TRUE(b.cut_vertices_between(0, 1).empty());
  EXPECT_TRUE(b.same_block(2, 4));
  EXPECT_FALSE(b.same_block(1, 3));
}

TEST(Blocks, PathEdgesAreBridgeBlocks) {
  const BlockDecomposition b = compute_blocks(named::path(4));
  EXPECT_EQ(b.block_count(), 3);
  for (const auto& edges : b.block_edges) EXPECT_EQ(edges.size(), 1u);
  EXPECT_EQ(b.cut_vertices_between(0, 3), (std::vector<VertexId>{1, 2}));
}

TEST(Blocks, BiconnectedGraphIsOneBlock) {
  for (const char* name : {"TRI", "K4", "CUBE", "K2_4", "K5"}) {
    const BlockDecomposition b = compute_blocks(named::by_name(name));
    EXPECT_EQ(b.block_count(), 1) << name;
  }
}

TEST(Blocks, DisconnectedPairThrows) {
  EdgeListGraph g{4, {{0, 1}, {2, 3}}};
  const BlockDecomposition b = compute_blocks(g);
  try {
    b.cut_vertices_between(0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DifferentComponents);
  }
}

// A vertex is a cut vertex iff deleting it increases the number of components.
TEST(Blocks, CutVerticesMatchDeletionTest) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    EmbeddedGraph g = random_embedding(9, 14, rng);
    const BlockDecomposition b = compute_blocks(g);
    auto components_without = [&](VertexId skip) {
      std::vector<int> seen(g.vertex_count(), 0);
      int count = 0;
      for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (s == skip || seen[s] || g.degree(s) == 0) continue;
        ++count;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
          VertexId x = stack.back();
          stack.pop_back();
          for (VertexId w : g.neighbors(x))
            if (w != skip && !seen[w]) {
              seen[w] = 1;
              stack.push_back(w);
            }
        }
      }
      return count;
    };
    const int base = components_without(kNone);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) continue;
      EXPECT_EQ(b.is_cut(v), components_without(v) > base) << "trial " << trial << " vertex " << v;
    }
    int edges = 0;
    for (const auto& be : b.block_edges) edges += static_cast<int>(be.size());
    EXPECT_EQ(edges, g.edge_count());
  }
}

}  // namespace
}  // namespace dynplanar
