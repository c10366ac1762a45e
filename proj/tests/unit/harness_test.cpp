#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dynplanar/harness.hpp"

namespace dynplanar {
namespace {

std::string k5_inserts() {
  std::string text = "n 5\n";
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) text += "I " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return text;
}

TEST(Harness, K5TraceDefersOneEdge) {
  const RunResult r = run_trace(parse_trace_string(k5_inserts() + "P\n"), {true, true});
  EXPECT_EQ(r.outputs.back(), "false");
  EXPECT_EQ(r.stats.inserts, 10u);
  EXPECT_EQ(r.stats.rejects, 1u);
  EXPECT_EQ(r.stats.mismatches, 0u);
  EXPECT_EQ(r.stats.violations, 0u);
}

TEST(Harness, K5DeleteRestoresPlanarity) {
  const RunResult r = run_trace(parse_trace_string(k5_inserts() + "D 0 1\nP\n"), {true, true});
  EXPECT_EQ(r.outputs.back(), "true");
  EXPECT_EQ(r.stats.mismatches, 0u);
  EXPECT_EQ(r.stats.flips_during_deletes, 0u);
}

TEST(Harness, EmptyTraceGivesZeroedStats) {
  const RunResult r = run_trace(parse_trace_string("n 3\n"));
  EXPECT_TRUE(r.outputs.empty());
  EXPECT_EQ(r.stats.n, 3);
  EXPECT_EQ(r.stats.ops, 0u);
  EXPECT_EQ(r.stats.inserts, 0u);
  EXPECT_EQ(r.stats.flips_total, 0u);
  EXPECT_EQ(r.stats.flips_per_insert, 0.0);
}

TEST(Harness, OutputsPerOpKind) {
  const RunResult r = run_trace(parse_trace_string("n 4\n# square\nI 0 1\nI 1 2\nI 2 3\nI 3 0\nQ 0 2\nC 1\nN 0 1\nD 0 1\nI 0 0\n"));
  ASSERT_EQ(r.outputs.size(), 9u);
  EXPECT_EQ(r.outputs[0], "accepted");
  EXPECT_EQ(r.outputs[4], "yes");
  EXPECT_EQ(r.outputs[5], "true");
  EXPECT_EQ(std::count(r.outputs[6].begin(), r.outputs[6].end(), ' '), 3);
  EXPECT_EQ(r.outputs[7], "deleted");
  EXPECT_EQ(r.outputs[8].rfind("error", 0), 0u);
  EXPECT_EQ(r.stats.op_errors, 1u);
}

TEST(Harness, StatsJsonHasStableKeys) {
  const nlohmann::json j = run_trace(parse_trace_string(k5_inserts())).stats.to_json();
  for (const char* key : {"n", "ops", "inserts", "rejects", "deletes", "flips_total", "flips_art", "flips_sr", "flips_p",
                          "flips_per_insert", "mismatches", "wall_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["flips_total"].get<std::uint64_t>(),
            j["flips_art"].get<std::uint64_t>() + j["flips_sr"].get<std::uint64_t>() + j["flips_p"].get<std::uint64_t>());
}

TEST(Harness, ParseErrorsNameTheLine) {
  const char* bad[] = {"n 3\nI 0 1\nX 1 2\n", "n 3\nI 0 7\n", "I 0 1\n", "n 3\nI 0\n"};
  const char* line[] = {"line 3", "line 2", "line 1", "line 2"};
  for (int i = 0; i < 4; ++i) {
    try {
      parse_trace_string(bad[i]);
      FAIL() << bad[i];
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(std::string(e.what()).find(line[i]), std::string::npos) << e.what();
    }
  }
}

TEST(Harness, FormatRoundTrips) {
  const Trace t = generate_trace(TraceModel::Random, 8, 200, 4);
  const Trace back = parse_trace_string(format_trace(t, "seed 4"));
  EXPECT_EQ(format_trace(back), format_trace(t));
}

TEST(Generator, SameSeedSameTrace) {
  for (TraceModel m : {TraceModel::Random, TraceModel::PlanarGrowth, TraceModel::Churn}) {
    EXPECT_EQ(format_trace(generate_trace(m, 16, 500, 9)), format_trace(generate_trace(m, 16, 500, 9)));
    EXPECT_NE(format_trace(generate_trace(m, 16, 500, 9)), format_trace(generate_trace(m, 16, 500, 10)));
  }
  EXPECT_EQ(parse_model(model_name(TraceModel::Churn)), TraceModel::Churn);
  EXPECT_THROW(parse_model("bogus"), Error);
}

TEST(Generator, PlanarGrowthIsInsertOnly) {
  const Trace t = generate_trace(TraceModel::PlanarGrowth, 64, 1000, 1);
  ASSERT_EQ(t.ops.size(), 1000u);
  for (const TraceOp& op : t.ops) EXPECT_EQ(op.kind, 'I');
}

TEST(Generator, ChurnStaysInBand) {
  for (int n : {8, 16, 32}) {
    const Trace t = generate_trace(TraceModel::Churn, n, 3000, 2);
    const auto [low, high] = churn_band(n);
    std::set<std::pair<VertexId, VertexId>> edges;
    bool warmed = false;
    for (const TraceOp& op : t.ops) {
      const auto key = std::minmax(op.a, op.b);
      if (op.kind == 'I') edges.insert(key);
      if (op.kind == 'D') edges.erase(key);
      const int m = static_cast<int>(edges.size());
      warmed |= m >= low;
      if (warmed) {
        EXPECT_GE(m, low);
        EXPECT_LE(m, high);
      }
    }
    EXPECT_TRUE(warmed);
  }
}

TEST(Sweep, OutputShape) {
  // Enough inserts that the sparse 4096 graph already needs some flips.
  const SweepResult s = sweep_amortized({64, 4096}, 6000, {1});
  ASSERT_EQ(s.rows.size(), 2u);
  EXPECT_EQ(s.rows[0].n, 64);
  EXPECT_EQ(s.rows[1].n, 4096);
  EXPECT_TRUE(std::isfinite(s.ratio));
  EXPECT_GE(s.ratio, 1.0);
  for (const SweepRow& r : s.rows) {
    EXPECT_GT(r.attempts, 0u);
    EXPECT_LE(r.attempts, 6000u);  // planar growth stops early on a full graph
  }
  const nlohmann::json j = sweep_to_json(s);
  EXPECT_EQ(j["rows"].size(), 2u);
}

TEST(Sweep, DeletionsNeverFlip) {
  std::string text = k5_inserts();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) text += "D " + std::to_string(a) + " " + std::to_string(b) + "\n";
  const RunResult r = run_trace(parse_trace_string(text), {true, true});
  EXPECT_EQ(r.stats.flips_during_deletes, 0u);
  const RunResult only = run_trace(parse_trace_string("n 4\nD 0 1\nD 2 3\n"));
  EXPECT_EQ(only.stats.flips_total, 0u);
}

}  // namespace
}  // namespace dynplanar
