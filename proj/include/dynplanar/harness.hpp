#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynplanar/tree_cotree.hpp"
#include "dynplanar/types.hpp"

namespace dynplanar {

// I u v insert, D u v delete, Q u v compatibility query, P global planar bit,
// C v component bit, N u v embedding neighbours of an embedded edge.
struct TraceOp {
  char kind = 'P';
  VertexId a = kNone;
  VertexId b = kNone;
};

struct Trace {
  int n = 0;
  std::vector<TraceOp> ops;
};

// Line-oriented: a header "n <count>", then one op per line; '#' starts a
// comment. Throws ParseError naming the offending line.
Trace parse_trace(std::istream& in);
Trace parse_trace_string(const std::string& text);
std::string format_trace(const Trace& trace, const std::string& comment = "");

struct RunOptions {
  bool check_oracle = false;
  bool validate_every = false;
  Backend backend = Backend::Reference;
};

struct RunStats {
  int n = 0;
  std::uint64_t ops = 0;
  std::uint64_t inserts = 0;   // I ops
  std::uint64_t attempts = 0;  // inserts that reached the planar structure
  std::uint64_t rejects = 0;   // inserts left deferred
  std::uint64_t deletes = 0;
  std::uint64_t queries = 0;
  std::uint64_t flips_total = 0;
  std::uint64_t flips_art = 0;
  std::uint64_t flips_sr = 0;
  std::uint64_t flips_p = 0;
  std::uint64_t flips_during_deletes = 0;  // by the deletions themselves, not pile drains
  std::uint64_t noncritical_flips = 0;
  std::uint64_t op_errors = 0;  // ops refused with an error code
  std::uint64_t mismatches = 0;
  std::uint64_t violations = 0;
  double flips_per_insert = 0;  // per attempt
  double wall_ms = 0;

  nlohmann::json to_json() const;
};

struct RunResult {
  RunStats stats;
  std::vector<std::string> outputs;  // one per op
  std::vector<std::string> problems;  // mismatch and violation descriptions
};

RunResult run_trace(const Trace& trace, const RunOptions& options = {});

enum class TraceModel { Random, PlanarGrowth, Churn };
TraceModel parse_model(const std::string& name);
const char* model_name(TraceModel model);

// Deterministic in (model, n, ops, seed). Requires n >= 2.
Trace generate_trace(TraceModel model, int n, int ops, std::uint64_t seed);
// Edge-count band the churn model stays inside once its warm-up is over.
std::pair<int, int> churn_band(int n);

struct SweepRow {
  int n = 0;
  std::uint64_t attempts = 0;
  std::uint64_t flips = 0;
  double flips_per_insert = 0;
  double normalized = 0;  // flips_per_insert / log2(n)
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // max over n of the normalized value divided by its min; infinity when the
  // min is zero.
  double ratio = 0;
};

// Inserts per vertex for sweeps, calibrated once: long enough that the
// graphs saturate and the normalized curve settles.
inline constexpr double kSweepOpsPerVertex = 6.0;

// Planar-growth traces driven straight into the planar structure, so every
// insertion is an attempt. ops <= 0 means ops_per_vertex * n operations.
SweepResult sweep_amortized(const std::vector<int>& ns, int ops, const std::vector<std::uint64_t>& seeds,
                            double ops_per_vertex = kSweepOpsPerVertex, Backend backend = Backend::Reference);
nlohmann::json sweep_to_json(const SweepResult& sweep);

}  // namespace dynplanar
