#include <gtest/gtest.h>

#include <algorithm>
#include <deque>

#include "dynplanar/decomposition.hpp"
#include "dynplanar/potential_oracle.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {
namespace {

EdgeListGraph plus_edge(EdgeListGraph g, VertexId a, VertexId b) {
  g.edges.emplace_back(a, b);
  return g;
}

bool planar(const EdgeListGraph& g) { return find_embedding_static(g).has_value(); }

// Triangle 0-1-2, then two cubes glued along an edge, then triangle 15-16-17.
// The cube block is attached at 2 and 15, which lie in different rigid
// pieces, so no embedding puts them on a common face.
EdgeListGraph chain_with_rigid_block() {
  const EdgeListGraph cube = named::cube();
  auto in_a = [](VertexId i) { return 2 + i; };
  auto in_b = [](VertexId i) -> VertexId {
    if (i == 0) return 8;  // cube A's vertex 6
    if (i == 1) return 9;  // cube A's vertex 7
    return 10 + (i - 2);
  };
  EdgeListGraph g{18, {{0, 1}, {1, 2}, {2, 0}, {15, 16}, {16, 17}, {17, 15}}};
  for (auto [a, b] : cube.edges) g.edges.emplace_back(in_a(a), in_a(b));
  for (auto [a, b] : cube.edges)
    if (!((a == 0 && b == 1) || (a == 1 && b == 0))) g.edges.emplace_back(in_b(a), in_b(b));
  return g;
}

TEST(EmbeddingSpace, CountsOfNamedGraphs) {
  EXPECT_EQ(enumerate_embeddings(named::tri()).size(), 1);
  EXPECT_EQ(enumerate_embeddings(named::k4()).size(), 2);
  EXPECT_EQ(enumerate_embeddings(named::k5(), 10).size(), 0);
  try {
    enumerate_embeddings(named::k5());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(EmbeddingSpace, FlipKindsOnNamedGraphs) {
  EmbeddingSpace tri = enumerate_embeddings(named::tri());
  build_flip_graph(tri);
  for (const auto& out : tri.flips) EXPECT_TRUE(out.empty());

  EmbeddingSpace bowtie = enumerate_embeddings(named::bowtie());
  build_flip_graph(bowtie);
  int articulation = 0;
  for (const auto& out : bowtie.flips)
    for (const FlipEdge& e : out) {
      EXPECT_EQ(e.kind, FlipKind::Articulation);
      ++articulation;
    }
  EXPECT_GT(articulation, 0);

  EmbeddingSpace k24 = enumerate_embeddings(named::k2_4());
  build_flip_graph(k24);
  bool has_p = false;
  for (const auto& out : k24.flips)
    for (const FlipEdge& e : out) has_p |= e.kind == FlipKind::P;
  EXPECT_TRUE(has_p);
}

// Every flip can be undone, and clean flips alone reach every embedding.
TEST(EmbeddingSpace, FlipGraphIsSymmetricAndCleanConnected) {
  for (const EdgeListGraph& g : connected_graphs(6)) {
    if (!planar(g)) continue;
    EmbeddingSpace space = enumerate_embeddings(g);
    build_flip_graph(space);
    for (int x = 0; x < space.size(); ++x)
      for (const FlipEdge& e : space.flips[x]) {
        const auto& back = space.flips[e.target];
        EXPECT_TRUE(std::any_of(back.begin(), back.end(), [&](const FlipEdge& r) { return r.target == x; }));
      }
    std::vector<bool> seen(space.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const FlipEdge& e : space.flips[x])
        if (e.clean && !seen[e.target]) {
          seen[e.target] = true;
          queue.push_back(e.target);
        }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST(FlipDistances, K2_4OppositePathsAreOnePFlipApart) {
  EmbeddingSpace space = enumerate_embeddings(named::k2_4());
  build_flip_graph(space);
  const std::vector<int> targets = embeddings_admitting(space, 2, 4);
  ASSERT_FALSE(targets.empty());
  int found = 0;
  for (int x = 0; x < space.size(); ++x) {
    std::vector<VertexId> around;
    for (DartId d : space.nodes[x].darts_at(0)) around.push_back(space.nodes[x].head(d));
    // x1..x4 in cyclic order, either orientation.
    const auto start = std::find(around.begin(), around.end(), 2);
    std::rotate(around.begin(), start, around.end());
    const bool ordered = around == std::vector<VertexId>{2, 3, 4, 5} || around == std::vector<VertexId>{2, 5, 4, 3};
    if (!ordered) continue;
    ++found;
    EXPECT_EQ(dist(space, DistKind::Clean, x, targets), 1);
    EXPECT_EQ(dist(space, DistKind::P, x, targets), 1);
  }
  EXPECT_GT(found, 0);
}

TEST(FlipDistances, TargetsAreAtZeroAndWeightsDominate) {
  for (const EdgeListGraph& g : connected_graphs(6)) {
    if (!planar(g)) continue;
    EmbeddingSpace space = enumerate_embeddings(g);
    build_flip_graph(space);
    for (VertexId x = 0; x < g.n; ++x)
      for (VertexId y = x + 1; y < g.n; ++y) {
        const std::vector<int> targets = embeddings_admitting(space, x, y);
        const auto clean = distances_to(space, DistKind::Clean, targets);
        const auto sep = distances_to(space, DistKind::Sep, targets);
        const auto p = distances_to(space, DistKind::P, targets);
        for (int t : targets) EXPECT_EQ(clean[t], 0);
        for (int h = 0; h < space.size(); ++h) {
          EXPECT_GE(clean[h], sep[h]);
          EXPECT_GE(sep[h], p[h]);
        }
      }
  }
}

TEST(Struts, ExistingEdgeHasNoCriticalStruts) {
  EXPECT_TRUE(struts(named::k4(), 0, 1).critical.empty());
  EXPECT_TRUE(struts(named::chain3(), 2, 3).critical.empty());
}

TEST(Struts, InsertableNonEdgeIsItsOwnCriticalStrut) {
  const std::set<VertexPair> just{{0, 2}};
  EXPECT_EQ(struts(named::c4(), 0, 2).critical, just);
  EXPECT_EQ(struts(named::c4(), 2, 0).critical, just);
  const std::set<VertexPair> ends{{0, 6}};
  EXPECT_EQ(struts(named::chain3(), 0, 6).critical, ends);
  // Different components: the pair itself.
  const EdgeListGraph two{6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};
  EXPECT_EQ(struts(two, 1, 4).critical, (std::set<VertexPair>{{1, 4}}));
}

TEST(Struts, RigidBlockOnNonplanarChainGetsTriconnectingStruts) {
  const EdgeListGraph g = chain_with_rigid_block();
  ASSERT_TRUE(planar(g));
  ASSERT_FALSE(planar(plus_edge(g, 2, 15)));
  ASSERT_FALSE(planar(plus_edge(g, 0, 16)));

  const StrutSet s = struts(g, 0, 16);
  EdgeListGraph block{g.n, {}};
  for (auto [a, b] : g.edges)
    if (a >= 2 && a <= 15 && b >= 2 && b <= 15) block.edges.emplace_back(a, b);
  ASSERT_EQ(spqr_tree(block).size(), 3);  // rigid, bond, rigid

  EdgeListGraph braced = block;
  int inside = 0;
  for (auto [a, b] : s.critical)
    if (a >= 2 && b <= 15) {
      braced.edges.emplace_back(a, b);
      ++inside;
    }
  EXPECT_GT(inside, 0);
  const SPQRTree t = spqr_tree(braced);
  ASSERT_EQ(t.size(), 1);
  EXPECT_EQ(t.nodes[0].kind, SPQRKind::R);

  EdgeListGraph with_all = g;
  for (auto [a, b] : s.solid()) with_all.edges.emplace_back(a, b);
  EXPECT_TRUE(planar(with_all));
}

TEST(Costs, SolidStrutsAdmittedMeansZeroCost) {
  const EdgeListGraph g = named::k2_4();
  EmbeddingSpace space = enumerate_embeddings(g);
  build_flip_graph(space);
  CostEvaluator eval(space);
  const StrutSet s = struts(g, 2, 4);
  ASSERT_FALSE(s.solid().empty());
  int zero = 0;
  for (int h = 0; h < space.size(); ++h) {
    bool admits_all = true;
    for (auto [a, b] : s.solid()) {
      const auto ok = embeddings_admitting(space, a, b);
      admits_all &= std::find(ok.begin(), ok.end(), h) != ok.end();
    }
    const int solid = eval.cost(s.solid(), DistKind::Clean, h);
    const int critical = eval.cost(s.critical, DistKind::Clean, h);
    EXPECT_EQ(solid == 0, admits_all);
    EXPECT_GE(solid, critical);
    EXPECT_GE(critical, 0);
    zero += solid == 0;
  }
  EXPECT_GT(zero, 0);
}

TEST(Costs, CriticalCostVanishesExactlyOnGoodEmbeddings) {
  EmbeddingSpace space = enumerate_embeddings(named::k2_4());
  const std::vector<int> good = embeddings_admitting(space, 2, 4);
  for (int h = 0; h < space.size(); ++h) {
    const bool is_good = std::find(good.begin(), good.end(), h) != good.end();
    EXPECT_EQ(cost(space, DistKind::Clean, h, 2, 4, CostWhich::Critical) == 0, is_good);
  }
}

TEST(Costs, UnreachableStrutThrows) {
  // K4 with (0,1) subdivided by 4 and (2,3) by 5: a rigid subdivision, so
  // 4 and 5 never share a face.
  const EdgeListGraph g{6, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {5, 3}}};
  EmbeddingSpace space = enumerate_embeddings(g);
  build_flip_graph(space);
  ASSERT_TRUE(embeddings_admitting(space, 4, 5).empty());
  CostEvaluator eval(space);
  try {
    eval.cost({{4, 5}}, DistKind::Clean, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteCost);
  }
  EXPECT_EQ(eval.cost({}, DistKind::P, 0), 0);
}

TEST(Properties, AllHoldOnNamedGraphs) {
  EXPECT_EQ(property_names().size(), 16u);
  for (const EdgeListGraph& g : {named::k2_4(), named::chain3(), named::bowtie(), named::c4()}) {
    PropertyReport report;
    PropertyChecker checker(g);
    checker.check_all_pairs(report);
    EXPECT_TRUE(report.ok()) << report.summary();
    EXPECT_GT(report.pairs, 0u);
    for (const PropertyResult& r : report.results) EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.counterexample;
  }
  const PropertyReport single = check_properties(named::k2_4(), 2, 4);
  EXPECT_TRUE(single.ok()) << single.summary();
  ASSERT_NE(single.find("cost-step"), nullptr);
  EXPECT_GT(single.find("cost-step")->checked, 0u);
}

TEST(Properties, StrutStructureOnRigidChain) {
  const EdgeListGraph g = chain_with_rigid_block();
  PropertyReport report;
  for (VertexId u : {0, 2, 16})
    for (VertexId v : {1, 15, 17})
      if (u != v) check_strut_structure(g, u, v, report);
  EXPECT_TRUE(report.ok()) << report.summary();
  ASSERT_NE(report.find("struts-nonadmissible-block"), nullptr);
  EXPECT_GT(report.find("struts-nonadmissible-block")->checked, 0u);
  ASSERT_NE(report.find("struts-nonadmissible-path"), nullptr);
  EXPECT_GT(report.find("struts-nonadmissible-path")->checked, 0u);
  EXPECT_EQ(report.find("cost-step"), nullptr);
}

}  // namespace
}  // namespace dynplanar
