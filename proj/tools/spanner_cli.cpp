// Command-line front end: build / verify / gen / bench.
//
// Exit codes: 0 ok, 1 stretch violation, 2 input error,
// 3 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spanner/errors.hpp"
#include "spanner/graph.hpp"
#include "spanner/oracle.hpp"
#include "spanner/reduction4.hpp"
#include "spanner/report.hpp"
#include "spanner/spanner5.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStretchViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvariantViolation = 3;

struct ThresholdFlags {
  std::optional<double> elim, heavy, f;
  double subtree_factor = 3.0;
  double shortpath_factor = 5.0;
  bool no_shortcut = false;

  spanner::SpannerParams to_params() const {
    spanner::SpannerParams p;
    p.elim_threshold = elim;
    p.heavy_threshold = heavy;
    p.f_threshold = f;
    p.subtree_factor = subtree_factor;
    p.shortpath_factor = shortpath_factor;
    p.dense_shortcut = !no_shortcut;
    return p;
  }
};

void add_threshold_flags(CLI::App* cmd, ThresholdFlags& flags) {
  cmd->add_option("--elim-threshold", flags.elim,
                  "Override the step-1 elimination degree threshold");
  cmd->add_option("--heavy-threshold", flags.heavy,
                  "Override the heavy-vertex degree threshold");
  cmd->add_option("--f-threshold", flags.f,
                  "Override the path degree-sum threshold F");
  cmd->add_option("--subtree-factor", flags.subtree_factor,
                  "Step-5 subtree condition uses factor*F")->capture_default_str();
  cmd->add_option("--shortpath-factor", flags.shortpath_factor,
                  "Step-7 path condition uses factor*F")->capture_default_str();
  cmd->add_flag("--no-shortcut", flags.no_shortcut,
                "Disable the m <= n^{7/5} add-all-edges shortcut");
}

spanner::Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spanner::Error("cannot open input file: " + path);
  return spanner::parse_edge_list(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw spanner::Error("cannot open output file: " + path);
  return out;
}

struct BuildOptions {
  std::string input, output, report_path;
  int mode = 4;
  unsigned threads = 1;
  bool force_verify = false;
  bool skip_verify = false;
  ThresholdFlags thresholds;
};

int run_build(const BuildOptions& opt) {
  spanner::Graph g = read_graph(opt.input);

  // Output paths are opened before the construction runs.
  std::optional<std::ofstream> spanner_out, report_out;
  if (!opt.output.empty()) spanner_out = open_output(opt.output);
  if (!opt.report_path.empty()) report_out = open_output(opt.report_path);

  spanner::SpannerParams params = opt.thresholds.to_params();
  nlohmann::json report;
  report["schema"] = "spanner-report/1";
  report["mode"] = opt.mode;
  report["input"] = {{"path", opt.input},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()}};

  const spanner::EdgeSet* h_edges = nullptr;
  std::optional<spanner::SpannerResult> five;
  std::optional<spanner::FourSpannerResult> four;
  if (opt.mode == 5) {
    five = spanner::build_5_spanner(g, params, opt.threads);
    h_edges = &five->spanner_edges;
    report["result"] = spanner::to_json(*five);
    report["edge_budget"] = spanner::to_json(spanner::edge_budget_report(g, *five));
  } else {
    four = spanner::build_4_spanner(g, params, opt.threads);
    h_edges = &four->spanner_edges;
    report["result"] = spanner::to_json(*four);
    report["edge_budget"] = spanner::to_json(spanner::edge_budget_report(g, *four));
  }

  bool do_verify = opt.force_verify ||
                   (!opt.skip_verify && g.vertex_count() <= 1024);
  int exit_code = kExitOk;
  if (do_verify) {
    auto stretch = spanner::verify_stretch(g, *h_edges, opt.mode);
    report["verification"] = spanner::to_json(stretch);
    if (!stretch.pass) exit_code = kExitStretchViolation;
  } else {
    report["verification"] = {{"performed", false}};
  }

  if (spanner_out) {
    spanner::serialize_edge_set(*spanner_out, *h_edges, g.vertex_count());
  }
  if (report_out) *report_out << spanner::dump_report(report);

  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
            << " mode=" << opt.mode << " |H|=" << h_edges->size();
  if (do_verify) {
    std::cout << " verify="
              << (exit_code == kExitOk ? "pass" : "FAIL");
  }
  std::cout << "\n";
  return exit_code;
}

struct VerifyOptions {
  std::string input, spanner_path, report_path;
  int k = 4;
};

int run_verify(const VerifyOptions& opt) {
  spanner::Graph g = read_graph(opt.input);
  spanner::Graph h = read_graph(opt.spanner_path);
  spanner::EdgeSet h_edges(h.edges());
  auto stretch = spanner::verify_stretch(g, h_edges, opt.k);
  if (!opt.report_path.empty()) {
    auto out = open_output(opt.report_path);
    out << spanner::dump_report(spanner::to_json(stretch));
  }
  std::cout << "k=" << opt.k << " pairs=" << stretch.pairs_checked
            << " max_excess=" << stretch.max_excess
            << " infinite=" << stretch.infinite_pairs
            << (stretch.pass ? " pass" : " FAIL") << "\n";
  return stretch.pass ? kExitOk : kExitStretchViolation;
}

struct GenOptions {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  spanner::Graph g = spanner::generate_gnm(opt.n, opt.m, opt.seed);
  std::string text = spanner::serialize(g);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    open_output(opt.output) << text;
  }
  return kExitOk;
}

struct BenchOptions {
  std::vector<std::size_t> sizes;
  double density_exponent = 1.8;
  int mode = 4;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output;
  ThresholdFlags thresholds;
};

std::uint64_t ladder_edge_count(std::size_t n, double exponent) {
  std::uint64_t cap = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  long double raw = powl(static_cast<long double>(n), exponent) + 1e-6L;
  return std::min<std::uint64_t>(cap, static_cast<std::uint64_t>(raw));
}

int run_bench(const BenchOptions& opt) {
  std::string csv = spanner::bench_csv_header();
  spanner::SpannerParams params = opt.thresholds.to_params();
  for (std::size_t n : opt.sizes) {
    std::uint64_t m = ladder_edge_count(n, opt.density_exponent);
    spanner::Graph g = spanner::generate_gnm(n, m, opt.seed);
    spanner::BenchRow row;
    row.n = n;
    row.m = m;
    row.mode = opt.mode;
    row.seed = opt.seed;
    auto start = std::chrono::steady_clock::now();
    if (opt.mode == 5) {
      auto result = spanner::build_5_spanner(g, params, opt.threads);
      row.h_edges = result.spanner_edges.size();
      row.ratio_to_bound =
          spanner::edge_budget_report(g, result).ratio_to_bound;
      row.s1_size = result.s1_size;
      row.s2_size = result.s2_size;
      row.elimination_rounds = result.elimination_rounds;
      row.step_millis = result.step_millis;
    } else {
      auto result = spanner::build_4_spanner(g, params, opt.threads);
      row.h_edges = result.spanner_edges.size();
      row.ratio_to_bound =
          spanner::edge_budget_report(g, result).ratio_to_bound;
      row.s1_size = result.doubled.s1_size;
      row.s2_size = result.doubled.s2_size;
      row.elimination_rounds = result.doubled.elimination_rounds;
      row.step_millis = result.doubled.step_millis;
      row.double_millis = result.double_millis;
      row.project_millis = result.project_millis;
    }
    row.total_millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    csv += spanner::bench_csv_row(row);
  }
  if (opt.output.empty()) {
    std::cout << csv;
  } else {
    open_output(opt.output) << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive graph spanners: deterministic 4- and 5-additive "
               "construction, exact verification, generation, benchmarks"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  CLI::App* build = app.add_subcommand(
      "build", "Build a spanner from an edge-list file");
  build->add_option("--input", build_opt.input, "Input graph (edge list)")
      ->required();
  build->add_option("--output", build_opt.output, "Spanner edge-list path");
  build->add_option("--report", build_opt.report_path, "JSON report path");
  build->add_option("--mode", build_opt.mode, "Additive stretch: 4 or 5")->capture_default_str()
      ->check(CLI::IsMember({4, 5}));
  build->add_option("--threads", build_opt.threads,
                    "Worker threads for per-root tree builds")->capture_default_str();
  build->add_flag("--verify", build_opt.force_verify,
                  "Force exact stretch verification");
  build->add_flag("--no-verify", build_opt.skip_verify,
                  "Skip verification (default skips when n > 1024)");
  add_threshold_flags(build, build_opt.thresholds);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify additive stretch of a spanner file");
  verify->add_option("--input", verify_opt.input, "Input graph")->required();
  verify->add_option("--spanner", verify_opt.spanner_path, "Spanner edge list")
      ->required();
  verify->add_option("--k", verify_opt.k, "Additive stretch bound")->capture_default_str();
  verify->add_option("--report", verify_opt.report_path, "JSON report path");

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a seeded random graph with exactly m edges");
  gen->add_option("--n", gen_opt.n, "Vertex count")->required();
  gen->add_option("--m", gen_opt.m, "Edge count")->required();
  gen->add_option("--seed", gen_opt.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--output", gen_opt.output, "Output path (default stdout)");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run a size ladder and emit a CSV of sizes and phase times");
  bench->add_option("--sizes", bench_opt.sizes, "Ladder of vertex counts")
      ->delimiter(',');
  bench->add_option("--density-exponent", bench_opt.density_exponent,
                    "m = min(n(n-1)/2, floor(n^exponent))")
      ->capture_default_str();
  bench->add_option("--mode", bench_opt.mode, "Additive stretch: 4 or 5")->capture_default_str()
      ->check(CLI::IsMember({4, 5}));
  bench->add_option("--seed", bench_opt.seed, "PRNG seed")->capture_default_str();
  bench->add_option("--threads", bench_opt.threads, "Worker threads")->capture_default_str();
  bench->add_option("--output", bench_opt.output, "CSV path (default stdout)");
  add_threshold_flags(bench, bench_opt.thresholds);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      if (build_opt.force_verify && build_opt.skip_verify) {
        std::cerr << "error: --verify conflicts with --no-verify\n";
        return kExitInputError;
      }
      return run_build(build_opt);
    }
    if (verify->parsed()) return run_verify(verify_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (bench->parsed()) return run_bench(bench_opt);
  } catch (const spanner::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const spanner::InfeasibleCover& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const spanner::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
