// hidden_topk: top-k degree discovery experiments on hidden bipartite graphs.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 invariant violation
// (including a result mismatch reported by `compare`).

#include <iostream>

#include <CLI11.hpp>

#include "experiment.hpp"
#include "hidden_topk/dsoe_star.hpp"
#include "hidden_topk/generators.hpp"

namespace {

using namespace hidden_topk;
using namespace hidden_topk::bench;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kInvariant = 3 };

struct CommonFlags {
  std::string dataset;
  std::string generate;
  std::string name;
  std::string format = "konect-bipartite";
  std::string source_side = "b";
  std::string algorithm = "dsoe-star";
  std::string budget_mode = "cumulative";
  std::string scheduling = "static";
  std::optional<VertexId> expect_nb;
  std::optional<VertexId> expect_nw;
  std::optional<std::uint64_t> expect_m;
  std::optional<std::uint64_t> order_seed;
  long long probe_delay_us = 0;
  RunConfig config;
};

void add_common(CLI::App* app, CommonFlags& f) {
  auto* data = app->add_option("--dataset", f.dataset, "Edge-list file (KONECT syntax, .gz ok)");
  auto* gen = app->add_option("--generate", f.generate,
                              "Synthetic graph: powerlaw:nb:nw:exp:mean:seed | uniform:nb:nw:p:seed");
  data->excludes(gen);
  app->add_option("--name", f.name, "Dataset name recorded in the output");
  app->add_option("--format", f.format, "konect-bipartite | edgelist-unipartite")
      ->capture_default_str();
  app->add_option("--source-side", f.source_side, "Side whose degrees are ranked: b | w")
      ->capture_default_str();
  app->add_option("--expect-nb", f.expect_nb, "Fail unless the loaded graph has this n_b");
  app->add_option("--expect-nw", f.expect_nw, "Fail unless the loaded graph has this n_w");
  app->add_option("--expect-m", f.expect_m, "Fail unless the loaded graph has this many edges");
  app->add_option("--algorithm", f.algorithm, "soe | dsoe | dsoe-star")->capture_default_str();
  app->add_option("--probe-delay-us", f.probe_delay_us, "Artificial latency per probe")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--budget-initial", f.config.dsoe.initial_budget, "DSOE initial failure budget")
      ->capture_default_str();
  app->add_option("--budget-growth", f.config.dsoe.growth_factor, "DSOE budget growth factor")
      ->capture_default_str();
  app->add_option("--budget-mode", f.budget_mode, "DSOE budget mode: cumulative | per-round")
      ->capture_default_str();
  app->add_option("--sample-rule", f.config.sample_rule, "DSOE* sample size: loglog | fixed:<n>")
      ->capture_default_str();
  app->add_option("--budget-rule", f.config.budget_rule,
                  "DSOE* negative budget: plus-one | double-plus-one")
      ->capture_default_str();
  app->add_option("--order-seed", f.order_seed, "Shuffle the white probe order with this seed");
  app->add_option("--scheduling", f.scheduling, "Executor scheduling: static | dynamic")
      ->capture_default_str();
  app->add_flag("--audit", f.config.audit, "Track every probed pair and cross-check states");
}

void finalize(CommonFlags& f) {
  RunConfig& c = f.config;
  if (f.dataset.empty() && f.generate.empty()) {
    throw CLI::ValidationError("--dataset or --generate is required");
  }
  if (!f.generate.empty()) c.source.generator = f.generate;
  c.source.manifest.name = f.name;
  c.source.manifest.path = f.dataset;
  c.source.manifest.format = parse_dataset_format(f.format);
  c.source.manifest.source_side = parse_source_side(f.source_side);
  c.source.manifest.n_black = f.expect_nb;
  c.source.manifest.n_white = f.expect_nw;
  c.source.manifest.edges = f.expect_m;
  c.algorithm = parse_algorithm(f.algorithm);
  c.dsoe.budget_mode = parse_budget_mode(f.budget_mode);
  c.dsoe.validate();
  parse_sample_rule(c.sample_rule);
  parse_budget_rule(c.budget_rule);
  c.order_seed = f.order_seed;
  c.probe_delay = std::chrono::microseconds(f.probe_delay_us);
  if (f.scheduling == "static") {
    c.scheduling = Scheduling::kStatic;
  } else if (f.scheduling == "dynamic") {
    c.scheduling = Scheduling::kDynamic;
  } else {
    throw CLI::ValidationError("--scheduling must be static or dynamic");
  }
}

void print_warnings(const Dataset& d) {
  for (const auto& w : d.report.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_run(CommonFlags& f, const std::string& out, const std::string& csv) {
  finalize(f);
  const Dataset dataset = load_source(f.config.source);
  print_warnings(dataset);
  if (f.config.k > dataset.graph.n_black()) {
    std::cerr << "warning: k=" << f.config.k << " exceeds n_b=" << dataset.graph.n_black()
              << "; probing exhaustively\n";
  }
  const ExperimentRecord record = run_on(dataset, f.config);
  if (out.empty()) {
    std::cout << to_json(record).dump(2) << "\n";
  } else {
    write_json(out, record);
    std::cerr << "probes=" << record.probes << " time_ms=" << record.time_ms
              << " result_size=" << record.result_size() << " top_degree=" << record.top_degree()
              << "\n";
  }
  if (!csv.empty()) append_csv(csv, record);
  return kOk;
}

int cmd_sweep(CommonFlags& f, const std::vector<std::size_t>& ks,
              const std::vector<unsigned>& workers, const std::vector<std::uint64_t>& seeds,
              const std::string& out_dir) {
  finalize(f);
  const auto cells = sweep(f.config, ks, workers, seeds,
                           out_dir.empty() ? std::nullopt
                                           : std::optional<std::filesystem::path>(out_dir));
  std::cout << csv_header() << ",status\n";
  int failures = 0;
  for (const auto& c : cells) {
    if (c.record) {
      std::cout << csv_row(*c.record) << ",ok\n";
    } else {
      ++failures;
      std::cout << "# k=" << c.k << " workers=" << c.workers << " seed=" << c.seed
                << " failed: " << c.error << "\n";
    }
  }
  return failures == 0 ? kOk : kInvariant;
}

int cmd_compare(const std::string& a_path, const std::string& b_path) {
  const ExperimentRecord a = read_json(a_path);
  const ExperimentRecord b = read_json(b_path);
  const CompareReport report = compare(a, b);
  std::cout << report.text;
  if (!report.compatible) return kData;
  return report.results_equal ? kOk : kInvariant;
}

int cmd_stats(const CommonFlags& flags) {
  CommonFlags f = flags;
  finalize(f);
  const Dataset d = load_source(f.config.source);
  print_warnings(d);
  const BipartiteGraph& g = d.graph;
  const BipartiteGraph t = swap_sides(g);
  auto avg = [](std::uint64_t m, VertexId n) { return n ? static_cast<double>(m) / n : 0.0; };
  nlohmann::json j = {{"dataset", d.name},
                      {"n_black", g.n_black()},
                      {"n_white", g.n_white()},
                      {"edges", g.edge_count()},
                      {"max_black_degree", g.max_degree()},
                      {"max_white_degree", t.max_degree()},
                      {"avg_black_degree", avg(g.edge_count(), g.n_black())},
                      {"avg_white_degree", avg(g.edge_count(), g.n_white())},
                      {"duplicate_edges", d.report.duplicate_edges},
                      {"self_loops_dropped", d.report.self_loops_dropped}};
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_generate(const std::string& spec, const std::string& out) {
  write_konect(generate_from_spec(spec), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-k degree discovery on hidden bipartite graphs"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string run_out, run_csv;
  auto* run = app.add_subcommand("run", "Run one algorithm and emit an experiment record");
  add_common(run, run_flags);
  run->add_option("--k", run_flags.config.k, "Answer size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--workers", run_flags.config.workers, "Executor workers")
      ->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--seed", run_flags.config.seed, "Sampling seed")->capture_default_str();
  run->add_option("--out", run_out, "Write the JSON record here (stdout if omitted)");
  run->add_option("--csv", run_csv, "Append a CSV row to this file");

  CommonFlags sweep_flags;
  std::vector<std::size_t> ks{10};
  std::vector<unsigned> worker_values{1};
  std::vector<std::uint64_t> seeds{0};
  std::string sweep_dir;
  auto* sw = app.add_subcommand("sweep", "Run the cross product of k, workers and seeds");
  add_common(sw, sweep_flags);
  sw->add_option("--k", ks, "Comma-separated answer sizes")->delimiter(',')
      ->check(CLI::PositiveNumber);
  sw->add_option("--workers", worker_values, "Comma-separated worker counts")->delimiter(',')
      ->check(CLI::PositiveNumber);
  sw->add_option("--seed,--seeds", seeds, "Comma-separated seeds")->delimiter(',');
  sw->add_option("--out", sweep_dir, "Output directory for CSV tables and JSON records");

  std::string cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "Diff two JSON experiment records");
  cmp->add_option("record_a", cmp_a)->required()->check(CLI::ExistingFile);
  cmp->add_option("record_b", cmp_b)->required()->check(CLI::ExistingFile);

  CommonFlags stats_flags;
  auto* stats = app.add_subcommand("stats", "Print degree statistics of a dataset");
  add_common(stats, stats_flags);

  std::string gen_spec, gen_out;
  auto* gen = app.add_subcommand("generate", "Write a synthetic graph as a KONECT edge list");
  gen->add_option("spec", gen_spec, "powerlaw:nb:nw:exp:mean:seed | uniform:nb:nw:p:seed")
      ->required();
  gen->add_option("--out", gen_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(run_flags, run_out, run_csv);
    if (*sw) return cmd_sweep(sweep_flags, ks, worker_values, seeds, sweep_dir);
    if (*cmp) return cmd_compare(cmp_a, cmp_b);
    if (*stats) return cmd_stats(stats_flags);
    if (*gen) return cmd_generate(gen_spec, gen_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
