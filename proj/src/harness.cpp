#include "dynplanar/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "dynplanar/general_dynamic.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {

namespace {

int arity(char kind) {
  switch (kind) {
    case 'P': return 0;
    case 'C': return 1;
    case 'I':
    case 'D':
    case 'Q':
    case 'N': return 2;
  }
  return -1;
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Trace parse_trace(std::istream& in) {
  Trace trace;
  bool have_header = false;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string head;
    if (!(words >> head)) continue;
    if (!have_header) {
      if (head != "n" || !(words >> trace.n) || trace.n < 0) parse_fail(line, "expected header 'n <count>'");
      have_header = true;
    } else {
      if (head.size() != 1 || arity(head[0]) < 0) parse_fail(line, "unknown op '" + head + "'");
      TraceOp op{head[0], kNone, kNone};
      const int k = arity(op.kind);
      if (k >= 1 && !(words >> op.a)) parse_fail(line, "missing vertex");
      if (k >= 2 && !(words >> op.b)) parse_fail(line, "missing second vertex");
      for (VertexId v : {op.a, op.b})
        if (v != kNone && (v < 0 || v >= trace.n)) parse_fail(line, "vertex " + std::to_string(v) + " out of range");
      trace.ops.push_back(op);
    }
    std::string extra;
    if (words >> extra) parse_fail(line, "trailing token '" + extra + "'");
  }
  if (!have_header) parse_fail(0, "missing header");
  return trace;
}

Trace parse_trace_string(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

std::string format_trace(const Trace& trace, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "n " << trace.n << "\n";
  for (const TraceOp& op : trace.ops) {
    out << op.kind;
    if (op.a != kNone) out << ' ' << op.a;
    if (op.b != kNone) out << ' ' << op.b;
    out << "\n";
  }
  return out.str();
}

nlohmann::json RunStats::to_json() const {
  return {{"n", n},
          {"ops", ops},
          {"inserts", inserts},
          {"attempts", attempts},
          {"rejects", rejects},
          {"deletes", deletes},
          {"queries", queries},
          {"flips_total", flips_total},
          {"flips_art", flips_art},
          {"flips_sr", flips_sr},
          {"flips_p", flips_p},
          {"flips_during_deletes", flips_during_deletes},
          {"noncritical_flips", noncritical_flips},
          {"op_errors", op_errors},
          {"flips_per_insert", flips_per_insert},
          {"mismatches", mismatches},
          {"violations", violations},
          {"wall_ms", wall_ms}};
}

RunResult run_trace(const Trace& trace, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  RunStats& st = result.stats;
  st.n = trace.n;
  GeneralDynamicGraph g(trace.n, options.backend);
  g.planar().set_validate_after_ops(false);

  auto mismatch = [&](std::size_t i, const std::string& what) {
    ++st.mismatches;
    result.problems.push_back("op " + std::to_string(i + 1) + ": " + what);
  };
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  auto truth = [](bool b) { return b ? "true" : "false"; };

  for (std::size_t i = 0; i < trace.ops.size(); ++i) {
    const TraceOp& op = trace.ops[i];
    ++st.ops;
    const std::uint64_t attempts_before = g.planar().ops().inserts;
    std::string out;
    try {
      switch (op.kind) {
        case 'I': {
          ++st.inserts;
          g.insert(op.a, op.b);
          const bool deferred = g.is_deferred(op.a, op.b);
          st.rejects += deferred;
          out = deferred ? "rejected" : "accepted";
          break;
        }
        case 'D':
          g.remove(op.a, op.b);
          ++st.deletes;
          out = "deleted";
          break;
        case 'Q': {
          ++st.queries;
          if (op.a == op.b) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(op.a));
          // Compatible when the component(s) stay planar with the edge added.
          bool yes = g.component_planar(op.a) && g.component_planar(op.b) && g.planar().query_compatible(op.a, op.b);
          out = yes_no(yes);
          if (options.check_oracle) {
            EdgeListGraph plus{g.vertex_count(), g.all_edges()};
            if (!g.has_edge(op.a, op.b)) plus.edges.emplace_back(op.a, op.b);
            const bool expect = component_planarity_static(plus)[op.a];
            if (expect != yes) mismatch(i, std::string("Q answered ") + yes_no(yes));
          }
          break;
        }
        case 'P': out = truth(g.is_planar()); break;
        case 'C': out = truth(g.component_planar(op.a)); break;
        case 'N': {
          const EdgeId e = g.planar().embedding().find_edge(op.a, op.b);
          if (e == kNone) throw Error(ErrorCode::UnknownEdge, "edge not embedded");
          const EdgeNeighbors nb = g.planar().embedding_neighbors(e);
          for (DartId d : nb) out += (out.empty() ? "" : " ") + dart_name(g.planar().embedding(), d);
          break;
        }
      }
    } catch (const Error& e) {
      ++st.op_errors;
      out = std::string("error ") + error_name(e.code());
    }
    st.attempts += g.planar().ops().inserts - attempts_before;
    result.outputs.push_back(std::move(out));

    if (options.validate_every) {
      const ValidationReport report = g.planar().embedding().validate();
      if (!report.ok()) {
        ++st.violations;
        result.problems.push_back("op " + std::to_string(i + 1) + ": " + report.violations.front());
      }
    }
    if (options.check_oracle) {
      const std::vector<bool> comp = component_planarity_static({g.vertex_count(), g.all_edges()});
      bool all = true;
      for (VertexId w = 0; w < g.vertex_count(); ++w) {
        all = all && comp[w];
        if (comp[w] != g.component_planar(w)) mismatch(i, "component bit of " + std::to_string(w));
      }
      if (all != g.is_planar()) mismatch(i, "global planar bit");
    }
  }
  const FlipCounters& f = g.planar().flips();
  st.flips_art = f.articulation;
  st.flips_sr = f.sr;
  st.flips_p = f.p;
  st.flips_total = f.total();
  st.noncritical_flips = f.noncritical;
  st.flips_during_deletes = g.planar().delete_flips().total();
  st.flips_per_insert = st.attempts ? static_cast<double>(st.flips_total) / static_cast<double>(st.attempts) : 0.0;
  st.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

TraceModel parse_model(const std::string& name) {
  if (name == "random") return TraceModel::Random;
  if (name == "planar-growth") return TraceModel::PlanarGrowth;
  if (name == "churn") return TraceModel::Churn;
  throw Error(ErrorCode::ParseError, "unknown model '" + name + "'");
}

const char* model_name(TraceModel model) {
  switch (model) {
    case TraceModel::Random: return "random";
    case TraceModel::PlanarGrowth: return "planar-growth";
    case TraceModel::Churn: return "churn";
  }
  return "?";
}

std::pair<int, int> churn_band(int n) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const int target = static_cast<int>(std::min<long long>(2LL * n, pairs));
  return {std::max(0, target - 1), target};
}

namespace {

// Generator state: the current edge set, so that inserts pick absent pairs
// and deletes pick present ones. Uses raw mt19937_64 output (not the
// implementation-defined distributions) so traces match across platforms.
class TraceBuilder {
 public:
  TraceBuilder(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  VertexId vertex() { return static_cast<VertexId>(rng_() % static_cast<std::uint64_t>(n_)); }
  std::pair<VertexId, VertexId> pair() {
    VertexId a = vertex(), b = vertex();
    while (b == a) b = vertex();
    return {a, b};
  }
  std::uint64_t roll(std::uint64_t k) { return rng_() % k; }
  bool full() const { return static_cast<long long>(edges_.size()) * 2 >= static_cast<long long>(n_) * (n_ - 1); }
  std::size_t edge_count() const { return edges_.size(); }

  bool insert(Trace& t) {
    if (full()) return false;
    for (int tries = 0; tries < 64; ++tries) {
      auto [a, b] = pair();
      if (edges_.count(key(a, b))) continue;
      return add(t, a, b);
    }
    // Dense graph: pick uniformly among the absent pairs.
    std::vector<std::pair<VertexId, VertexId>> absent;
    for (VertexId x = 0; x < n_; ++x)
      for (VertexId y = x + 1; y < n_; ++y)
        if (!edges_.count({x, y})) absent.emplace_back(x, y);
    auto [a, b] = absent[roll(absent.size())];
    return add(t, a, b);
  }
  bool remove(Trace& t) {
    if (edges_.empty()) return false;
    auto it = edges_.begin();
    std::advance(it, static_cast<long>(roll(edges_.size())));
    t.ops.push_back({'D', it->first, it->second});
    edges_.erase(it);
    return true;
  }

 private:
  bool add(Trace& t, VertexId a, VertexId b) {
    edges_.insert(key(a, b));
    t.ops.push_back({'I', a, b});
    return true;
  }
  static std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }
  int n_;
  std::mt19937_64 rng_;
  std::set<std::pair<VertexId, VertexId>> edges_;
};

}  // namespace

Trace generate_trace(TraceModel model, int n, int ops, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "trace generation needs n >= 2");
  Trace t{n, {}};
  TraceBuilder b(n, seed);
  const int high = churn_band(n).second;
  while (static_cast<int>(t.ops.size()) < ops) {
    switch (model) {
      case TraceModel::Random:
        switch (b.roll(5)) {
          case 0:
            if (!b.insert(t)) b.remove(t);
            break;
          case 1:
            if (!b.remove(t)) b.insert(t);
            break;
          case 2: {
            auto [x, y] = b.pair();
            t.ops.push_back({'Q', x, y});
            break;
          }
          case 3: t.ops.push_back({'P', kNone, kNone}); break;
          default: t.ops.push_back({'C', b.vertex(), kNone}); break;
        }
        break;
      case TraceModel::PlanarGrowth:
        if (!b.insert(t)) return t;
        break;
      case TraceModel::Churn:
        // Warm up to the top of the band, then alternate delete and insert.
        if (static_cast<int>(b.edge_count()) < high) b.insert(t);
        else b.remove(t);
        break;
    }
  }
  return t;
}

SweepResult sweep_amortized(const std::vector<int>& ns, int ops, const std::vector<std::uint64_t>& seeds,
                            double ops_per_vertex, Backend backend) {
  SweepResult sweep;
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (int n : ns) {
    SweepRow row;
    row.n = n;
    const int count = ops > 0 ? ops : static_cast<int>(std::lround(ops_per_vertex * n));
    for (std::uint64_t seed : seeds) {
      const Trace t = generate_trace(TraceModel::PlanarGrowth, n, count, seed);
      PlanarDynamicGraph g(n, backend);
      g.set_validate_after_ops(false);
      for (const TraceOp& op : t.ops) g.insert(op.a, op.b);
      row.attempts += g.ops().inserts;
      row.flips += g.flips().total();
    }
    row.flips_per_insert = row.attempts ? static_cast<double>(row.flips) / static_cast<double>(row.attempts) : 0.0;
    row.normalized = row.flips_per_insert / std::log2(static_cast<double>(n));
    lo = std::min(lo, row.normalized);
    hi = std::max(hi, row.normalized);
    sweep.rows.push_back(row);
  }
  sweep.ratio = sweep.rows.empty() ? 0.0 : (lo > 0 ? hi / lo : std::numeric_limits<double>::infinity());
  return sweep;
}

nlohmann::json sweep_to_json(const SweepResult& sweep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : sweep.rows)
    rows.push_back({{"n", r.n},
                    {"attempts", r.attempts},
                    {"flips", r.flips},
                    {"flips_per_insert", r.flips_per_insert},
                    {"flips_per_insert_over_log2n", r.normalized}});
  return {{"rows", rows}, {"ratio", sweep.ratio}};
}

}  // namespace dynplanar
