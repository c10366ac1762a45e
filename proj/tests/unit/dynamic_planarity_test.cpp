#include <gtest/gtest.h>

#include <random>

#include "dynplanar/dynamic_planarity.hpp"
#include "dynplanar/static_oracle.hpp"
#include "support/test_support.hpp"

namespace dynplanar {
namespace {

using ::dynplanar::testing::cofacial_scan;

void insert_all(PlanarDynamicGraph& g, const EdgeListGraph& el) {
  for (auto [a, b] : el.edges) ASSERT_EQ(g.insert(a, b), InsertOutcome::Accepted) << a << "-" << b;
}

TEST(PlanarDynamic, K4TreeEdgesThenRestAllAccepted) {
  PlanarDynamicGraph g(4);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}})
    EXPECT_EQ(g.insert(a, b), InsertOutcome::Accepted);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(g.embedding().face_count(), 4);
}

TEST(PlanarDynamic, CubeDiagonalRejectedAndEdgeSetUnchanged) {
  PlanarDynamicGraph g(8);
  insert_all(g, named::cube());
  const int before = g.edge_count();
  EXPECT_EQ(g.insert(0, 7), InsertOutcome::Rejected);
  EXPECT_EQ(g.edge_count(), before);
  EXPECT_FALSE(g.has_edge(0, 7));
  EXPECT_EQ(g.ops().rejected, 1u);
}

TEST(PlanarDynamic, K2_4OppositeInsertCostsOnePFlip) {
  PlanarDynamicGraph g(6);
  // Paths 2, 3, 4, 5 inserted so that 2 and 4 end up on no common face.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}})
    ASSERT_EQ(g.insert(a, b), InsertOutcome::Accepted);
  VertexId x = 2, y = kNone;
  for (VertexId c : {3, 4, 5})
    if (!cofacial_scan(g.embedding(), x, c)) y = c;
  ASSERT_NE(y, kNone);
  const std::uint64_t before = g.flips().total();
  EXPECT_EQ(g.insert(x, y), InsertOutcome::Accepted);
  EXPECT_EQ(g.flips().total() - before, 1u);
  EXPECT_EQ(g.last_op_flips().p, 1u);
  EXPECT_EQ(g.last_op_flips().sr + g.last_op_flips().articulation, 0u);
}

TEST(PlanarDynamic, DeleteNeverFlipsAndReinsertIsFree) {
  PlanarDynamicGraph g(8);
  insert_all(g, named::cube());
  const std::uint64_t before = g.flips().total();
  g.remove(0, 1);
  EXPECT_EQ(g.flips().total(), before);
  EXPECT_EQ(g.insert(0, 1), InsertOutcome::Accepted);
  EXPECT_EQ(g.last_op_flips().total(), 0u);
}

TEST(PlanarDynamic, DeletingBridgeSplitsComponent) {
  PlanarDynamicGraph g(6);
  insert_all(g, named::bowtie());
  g.insert(4, 5);
  g.remove(4, 5);
  EXPECT_NE(g.embedding().component_of(4), g.embedding().component_of(5));
  EXPECT_TRUE(g.embedding().validate().ok());
}

TEST(PlanarDynamic, Errors) {
  PlanarDynamicGraph g(3);
  g.insert(0, 1);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([&] { g.insert(1, 0); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([&] { g.insert(2, 2); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([&] { g.remove(1, 2); }), ErrorCode::UnknownEdge);
  EXPECT_EQ(code_of([&] { g.embedding_neighbors(5); }), ErrorCode::UnknownEdge);
}

TEST(PlanarDynamic, QueryCompatible) {
  PlanarDynamicGraph g(8);
  insert_all(g, named::cube());
  EXPECT_TRUE(g.query_compatible(0, 1));
  EXPECT_FALSE(g.query_compatible(0, 7));
  EXPECT_TRUE(g.query_compatible(0, 3));
  // The query leaves the pair linkable: inserting now needs no flips.
  EXPECT_EQ(g.insert(0, 3), InsertOutcome::Accepted);
  EXPECT_EQ(g.last_op_flips().total(), 0u);
}

TEST(PlanarDynamic, EmbeddingNeighbors) {
  PlanarDynamicGraph g(4);
  g.insert(0, 1);
  g.insert(1, 2);
  g.insert(2, 0);
  g.insert(2, 3);
  const EdgeId pendant = g.embedding().find_edge(2, 3);
  const EdgeNeighbors nb = g.embedding_neighbors(pendant);
  const DartId at3 = 2 * pendant + 1;  // dart from 3, the larger endpoint
  EXPECT_EQ(nb[2], at3);
  EXPECT_EQ(nb[3], at3);
  const EdgeId e01 = g.embedding().find_edge(0, 1);
  const EdgeNeighbors tri = g.embedding_neighbors(e01);
  // At 0 the only other dart goes to 2; at 1 it goes to 2 as well.
  EXPECT_EQ(g.embedding().head(tri[0]), 2);
  EXPECT_EQ(g.embedding().head(tri[1]), 2);
  EXPECT_EQ(g.embedding().head(tri[2]), 2);
  EXPECT_EQ(g.embedding().head(tri[3]), 2);
  // Consistent with face walks: the dart entering d's face just before d is
  // the twin of d's rotation predecessor.
  for (EdgeId e : g.embedding().edges()) {
    const EdgeNeighbors n = g.embedding_neighbors(e);
    EXPECT_EQ(g.embedding().face_next(g.embedding().twin(n[0])), 2 * e);
    EXPECT_EQ(g.embedding().face_next(g.embedding().twin(n[2])), 2 * e + 1);
  }
}

// Random inserts, deletes and queries on a small vertex set, checked against
// the static oracle after every step.
TEST(PlanarDynamic, RandomOpsAgreeWithOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 6;
    PlanarDynamicGraph g(n);
    EdgeListGraph shadow{n, {}};
    for (int step = 0; step < 120; ++step) {
      VertexId a = static_cast<VertexId>(rng() % n), b = static_cast<VertexId>(rng() % n);
      if (a == b) continue;
      EdgeListGraph plus = shadow;
      plus.edges.emplace_back(a, b);
      const int action = static_cast<int>(rng() % 4);
      if (g.has_edge(a, b)) {
        if (action == 0) {
          const std::uint64_t before = g.flips().total();
          g.remove(a, b);
          EXPECT_EQ(g.flips().total(), before);
          std::erase_if(shadow.edges, [&](auto e) { return (e.first == a && e.second == b) || (e.first == b && e.second == a); });
        }
        continue;
      }
      if (action == 3) {
        EXPECT_EQ(g.query_compatible(a, b), is_planar_static(plus));
        continue;
      }
      const bool planar = is_planar_static(plus);
      EXPECT_EQ(g.insert(a, b) == InsertOutcome::Accepted, planar);
      if (planar) shadow = plus;
      EXPECT_EQ(g.edge_count(), static_cast<int>(shadow.edges.size()));
    }
    EXPECT_EQ(g.flips().noncritical, 0u);
  }
}

}  // namespace
}  // namespace dynplanar
