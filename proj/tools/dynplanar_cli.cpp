// Command-line front end: run traces, generate workloads, sweep flip counts.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dynplanar/harness.hpp"

using namespace dynplanar;

namespace {

template <typename T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::istringstream word(item);
    T value{};
    if (!(word >> value)) throw CLI::ValidationError("list", "bad item '" + item + "'");
    out.push_back(value);
  }
  return out;
}

Backend parse_backend(const std::string& name) {
  if (name == "reference") return Backend::Reference;
  if (name == "balanced") {
    // Only the reference primitives exist; the tag is carried through.
    std::cerr << "note: balanced backend not built, running reference primitives\n";
    return Backend::Balanced;
  }
  throw CLI::ValidationError("--backend", "expected reference or balanced");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic planarity testing with embedding maintenance"};
  app.require_subcommand(1);

  std::string trace_path, stats_path, backend_name = "reference";
  bool check_oracle = false, validate_every = false, quiet = false;
  auto* run = app.add_subcommand("run", "Execute a trace, printing one line per op");
  run->add_option("--trace", trace_path, "Trace file ('-' for stdin)")->required();
  run->add_flag("--check-oracle", check_oracle, "Compare against the static planarity oracle after every op");
  run->add_flag("--validate-every", validate_every, "Validate the embedding after every op");
  run->add_option("--stats", stats_path, "Write run statistics as JSON");
  run->add_option("--backend", backend_name, "reference|balanced");
  run->add_flag("--quiet", quiet, "Suppress per-op output");

  std::string model = "random";
  int n = 16, ops = 1000;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a trace on stdout");
  gen->add_option("--model", model, "random|planar-growth|churn");
  gen->add_option("--n", n, "Vertex count")->check(CLI::Range(2, 1 << 24));
  gen->add_option("--ops", ops, "Operation count")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "Random seed");

  std::string ns_text = "64,128,256,512,1024,2048,4096", seeds_text = "1,2,3", sweep_out;
  int sweep_ops = 0;
  double per_vertex = kSweepOpsPerVertex;
  auto* sweep = app.add_subcommand("sweep", "Mean flips per attempted insert across n (planar-growth)");
  sweep->add_option("--ns", ns_text, "Comma-separated vertex counts");
  sweep->add_option("--ops", sweep_ops, "Inserts per n and seed (default: ops-per-vertex * n)");
  sweep->add_option("--ops-per-vertex", per_vertex, "Used when --ops is absent");
  sweep->add_option("--seeds", seeds_text, "Comma-separated seeds");
  sweep->add_option("--json", sweep_out, "Write the curve as JSON");
  sweep->add_option("--backend", backend_name, "reference|balanced");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      Trace trace;
      if (trace_path == "-") {
        trace = parse_trace(std::cin);
      } else {
        std::ifstream in(trace_path);
        if (!in) {
          std::cerr << "cannot open " << trace_path << "\n";
          return 2;
        }
        trace = parse_trace(in);
      }
      const RunResult result = run_trace(trace, {check_oracle, validate_every, parse_backend(backend_name)});
      if (!quiet)
        for (const std::string& line : result.outputs) std::cout << line << "\n";
      for (const std::string& p : result.problems) std::cerr << p << "\n";
      if (!stats_path.empty()) std::ofstream(stats_path) << result.stats.to_json().dump(2) << "\n";
      const RunStats& st = result.stats;
      return st.mismatches + st.violations + st.noncritical_flips + st.flips_during_deletes == 0 ? 0 : 1;
    }
    if (*gen) {
      const Trace trace = generate_trace(parse_model(model), n, ops, seed);
      std::cout << format_trace(trace, "model=" + model + " n=" + std::to_string(n) + " ops=" + std::to_string(ops) +
                                           " seed=" + std::to_string(seed));
      return 0;
    }
    if (*sweep) {
      const SweepResult result = sweep_amortized(split_list<int>(ns_text), sweep_ops,
                                                 split_list<std::uint64_t>(seeds_text), per_vertex,
                                                 parse_backend(backend_name));
      std::cout << "n\tattempts\tflips\tflips/insert\t/log2(n)\n";
      for (const SweepRow& r : result.rows)
        std::cout << r.n << "\t" << r.attempts << "\t" << r.flips << "\t" << r.flips_per_insert << "\t" << r.normalized
                  << "\n";
      std::cout << "ratio\t" << result.ratio << "\n";
      if (!sweep_out.empty()) std::ofstream(sweep_out) << sweep_to_json(result).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
