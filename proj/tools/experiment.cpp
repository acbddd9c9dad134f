#include "experiment.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hidden_topk/dsoe_star.hpp"
#include "hidden_topk/generators.hpp"
#include "hidden_topk/soe.hpp"

namespace hidden_topk::bench {

Algorithm parse_algorithm(std::string_view text) {
  if (text == "soe") return Algorithm::kSoe;
  if (text == "dsoe") return Algorithm::kDsoe;
  if (text == "dsoe-star" || text == "dsoe*") return Algorithm::kDsoeStar;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) +
                              "' (expected soe, dsoe or dsoe-star)");
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSoe: return "soe";
    case Algorithm::kDsoe: return "dsoe";
    case Algorithm::kDsoeStar: return "dsoe-star";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view token, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad number '" + std::string(token) + "' in generator spec '" +
                                std::string(spec) + "'");
  }
  return value;
}

std::string dataset_name(const GraphSource& source) {
  if (!source.manifest.name.empty()) return source.manifest.name;
  if (source.generator) return *source.generator;
  return source.manifest.path.stem().string();
}

nlohmann::json config_json(const RunConfig& config) {
  nlohmann::json j;
  j["probe_delay_us"] = config.probe_delay.count();
  j["scheduling"] = config.scheduling == Scheduling::kStatic ? "static" : "dynamic";
  if (config.order_seed) j["order_seed"] = *config.order_seed;
  if (config.algorithm == Algorithm::kDsoe) {
    j["budget_initial"] = config.dsoe.initial_budget;
    j["budget_growth"] = config.dsoe.growth_factor;
    j["budget_mode"] = std::string(to_string(config.dsoe.budget_mode));
  } else if (config.algorithm == Algorithm::kDsoeStar) {
    j["sample_rule"] = config.sample_rule;
    j["budget_rule"] = config.budget_rule;
  }
  return j;
}

}  // namespace

BipartiteGraph generate_from_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "powerlaw" && parts.size() == 6) {
    return generate_powerlaw(parse_number<VertexId>(parts[1], spec),
                             parse_number<VertexId>(parts[2], spec),
                             parse_number<double>(parts[3], spec),
                             parse_number<double>(parts[4], spec),
                             parse_number<std::uint64_t>(parts[5], spec));
  }
  if (parts[0] == "uniform" && parts.size() == 5) {
    return generate_random(parse_number<VertexId>(parts[1], spec),
                           parse_number<VertexId>(parts[2], spec),
                           parse_number<double>(parts[3], spec),
                           parse_number<std::uint64_t>(parts[4], spec));
  }
  throw std::invalid_argument("bad generator spec '" + std::string(spec) +
                              "' (expected powerlaw:nb:nw:exp:mean:seed or uniform:nb:nw:p:seed)");
}

Dataset load_source(const GraphSource& source) {
  Dataset d;
  d.name = dataset_name(source);
  if (source.generator) {
    d.graph = generate_from_spec(*source.generator);
    if (source.manifest.source_side == SourceSide::kWhite) d.graph = swap_sides(d.graph);
    d.label_base = 0;
    return d;
  }
  LoadedGraph loaded = load_dataset(source.manifest);
  d.graph = std::move(loaded.graph);
  d.report = std::move(loaded.report);
  d.label_base = 1;
  return d;
}

TopKOutcome run_algorithm(const BipartiteGraph& graph, const RunConfig& config,
                          ProbeOracle& oracle) {
  const ProbeOrder order = config.order_seed ? ProbeOrder::shuffled(graph.n_white(), *config.order_seed)
                                             : ProbeOrder(graph.n_white());
  switch (config.algorithm) {
    case Algorithm::kSoe:
      return soe_topk(oracle, config.k, order);
    case Algorithm::kDsoe: {
      Executor executor(config.workers, config.scheduling);
      return dsoe_topk(oracle, config.k, config.dsoe, executor, order);
    }
    case Algorithm::kDsoeStar: {
      DsoeStarConfig star;
      star.sample_size_rule = parse_sample_rule(config.sample_rule);
      star.budget_rule = parse_budget_rule(config.budget_rule);
      star.seed = config.seed;
      Executor executor(config.workers, config.scheduling);
      return dsoe_star_topk(oracle, config.k, star, executor, order);
    }
  }
  throw std::logic_error("unhandled algorithm");
}

ExperimentRecord run_on(const Dataset& dataset, const RunConfig& config) {
  if (config.k == 0) throw std::invalid_argument("k must be at least 1");
  if (config.workers == 0) throw std::invalid_argument("workers must be at least 1");
  const BipartiteGraph& graph = dataset.graph;

  ProbeOracle oracle(graph, config.probe_delay);
  if (config.audit) oracle.enable_audit();

  const auto started = std::chrono::steady_clock::now();
  TopKOutcome outcome = run_algorithm(graph, config, oracle);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  ExperimentRecord r;
  r.dataset = dataset.name;
  r.algorithm = std::string(to_string(config.algorithm));
  r.k = config.k;
  r.workers = config.algorithm == Algorithm::kSoe ? 1 : config.workers;
  r.seed = config.seed;
  r.source_side = std::string(to_string(config.source.manifest.source_side));
  r.n_black = graph.n_black();
  r.n_white = graph.n_white();
  r.edges = graph.edge_count();
  r.probes = outcome.probes;
  r.time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  r.k_exceeds_population = outcome.result.k_exceeds_population();
  r.rounds = std::move(outcome.rounds);
  for (const auto& e : outcome.result.entries()) {
    r.result.push_back({e.vertex, std::to_string(std::uint64_t{e.vertex} + dataset.label_base),
                        e.degree});
  }
  r.config = config_json(config);

  if (config.audit) {
    const AuditReport audit = oracle.audit_report();
    if (audit.repeated_pairs || audit.sandwich_violations || audit.unsafe_prunes) {
      throw InvariantViolation("audit failed: " + std::to_string(audit.repeated_pairs) +
                               " repeated probes, " + std::to_string(audit.sandwich_violations) +
                               " sandwich violations, " + std::to_string(audit.unsafe_prunes) +
                               " unsafe prunes");
    }
  }
  if (std::string problem = validate_record(r); !problem.empty()) {
    throw InvariantViolation(problem);
  }
  return r;
}

std::string validate_record(const ExperimentRecord& record) {
  const std::uint64_t pairs = std::uint64_t{record.n_black} * record.n_white;
  if (record.probes > pairs) {
    return "probe count " + std::to_string(record.probes) + " exceeds n_b*n_w = " +
           std::to_string(pairs);
  }
  if (pairs > 0 && record.k >= 1 && record.probes == 0) return "non-empty graph but zero probes";
  const auto& res = record.result;
  for (std::size_t i = 1; i < res.size(); ++i) {
    const bool ordered = res[i - 1].degree > res[i].degree ||
                         (res[i - 1].degree == res[i].degree && res[i - 1].vertex < res[i].vertex);
    if (!ordered) return "result entries out of order at position " + std::to_string(i);
  }
  if (res.size() < record.k && !record.k_exceeds_population) {
    return "result holds " + std::to_string(res.size()) + " entries for k=" +
           std::to_string(record.k);
  }
  if (record.k > 0 && res.size() > record.k && res.back().degree != res[record.k - 1].degree) {
    return "result is not tie-closed at rank k";
  }
  for (const auto& e : res) {
    if (e.degree > record.n_white) return "degree above n_w for vertex " + e.label;
  }
  return {};
}

nlohmann::json to_json(const ExperimentRecord& r) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["dataset"] = r.dataset;
  j["algorithm"] = r.algorithm;
  j["k"] = r.k;
  j["workers"] = r.workers;
  j["seed"] = r.seed;
  j["source_side"] = r.source_side;
  j["n_black"] = r.n_black;
  j["n_white"] = r.n_white;
  j["edges"] = r.edges;
  j["probes"] = r.probes;
  j["time_ms"] = r.time_ms;
  j["result_size"] = r.result_size();
  j["top_degree"] = r.top_degree();
  j["k_exceeds_population"] = r.k_exceeds_population;
  j["config"] = r.config;
  auto& rounds = j["rounds"] = nlohmann::json::array();
  for (const auto& s : r.rounds) {
    rounds.push_back({{"round", s.round},
                      {"phase", s.phase},
                      {"probes", s.probes},
                      {"completed", s.completed},
                      {"budget", s.budget},
                      {"threshold", s.threshold},
                      {"wall_ms", std::chrono::duration<double, std::milli>(s.wall).count()}});
  }
  auto& result = j["result"] = nlohmann::json::array();
  for (const auto& e : r.result) {
    result.push_back({{"vertex", e.vertex}, {"label", e.label}, {"degree", e.degree}});
  }
  return j;
}

ExperimentRecord record_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) {
      throw DataError("unsupported record schema " + j.at("schema").dump());
    }
    ExperimentRecord r;
    r.dataset = j.at("dataset").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.workers = j.at("workers").get<unsigned>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.source_side = j.at("source_side").get<std::string>();
    r.n_black = j.at("n_black").get<VertexId>();
    r.n_white = j.at("n_white").get<VertexId>();
    r.edges = j.at("edges").get<std::uint64_t>();
    r.probes = j.at("probes").get<ProbeCount>();
    r.time_ms = j.at("time_ms").get<double>();
    r.k_exceeds_population = j.value("k_exceeds_population", false);
    r.config = j.value("config", nlohmann::json::object());
    for (const auto& s : j.at("rounds")) {
      RoundStats st;
      st.round = s.at("round").get<std::uint32_t>();
      st.phase = s.at("phase").get<std::string>();
      st.probes = s.at("probes").get<ProbeCount>();
      st.completed = s.at("completed").get<std::uint32_t>();
      st.budget = s.value("budget", std::uint64_t{0});
      st.threshold = s.value("threshold", Degree{0});
      st.wall = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::duration<double, std::milli>(s.at("wall_ms").get<double>()));
      r.rounds.push_back(std::move(st));
    }
    for (const auto& e : j.at("result")) {
      r.result.push_back({e.at("vertex").get<VertexId>(), e.at("label").get<std::string>(),
                          e.at("degree").get<Degree>()});
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("malformed record: ") + ex.what());
  }
}

std::string csv_header() {
  return "dataset,algorithm,k,workers,seed,source_side,probes,time_ms,result_size,top_degree";
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

}  // namespace

std::string csv_row(const ExperimentRecord& r) {
  std::ostringstream os;
  os << csv_field(r.dataset) << ',' << r.algorithm << ',' << r.k << ',' << r.workers << ','
     << r.seed << ',' << r.source_side << ',' << r.probes << ',' << format_ms(r.time_ms) << ','
     << r.result_size() << ',' << r.top_degree();
  return os.str();
}

void append_csv(const std::filesystem::path& path, const ExperimentRecord& record) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw DataError("cannot write " + path.string());
  if (fresh) out << csv_header() << '\n';
  out << csv_row(record) << '\n';
}

void write_json(const std::filesystem::path& path, const ExperimentRecord& record) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << to_json(record).dump(2) << '\n';
}

ExperimentRecord read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(path.string() + ": " + ex.what());
  }
  return record_from_json(j);
}

std::vector<SweepCell> sweep(const RunConfig& base, const std::vector<std::size_t>& k_values,
                             const std::vector<unsigned>& worker_values,
                             const std::vector<std::uint64_t>& seeds,
                             const std::optional<std::filesystem::path>& output_dir) {
  if (k_values.empty() || worker_values.empty() || seeds.empty()) {
    throw std::invalid_argument("sweep needs at least one k, worker count and seed");
  }
  const Dataset dataset = load_source(base.source);

  std::vector<SweepCell> cells;
  for (std::size_t k : k_values) {
    for (unsigned workers : worker_values) {
      for (std::uint64_t seed : seeds) {
        RunConfig config = base;
        config.k = k;
        config.workers = workers;
        config.seed = seed;
        SweepCell cell{k, workers, seed, std::nullopt, {}};
        try {
          cell.record = run_on(dataset, config);
        } catch (const std::exception& ex) {
          cell.error = ex.what();
        }
        cells.push_back(std::move(cell));
      }
    }
  }

  if (!output_dir) return cells;
  std::filesystem::create_directories(*output_dir);

  std::ofstream all(*output_dir / "sweep.csv");
  all << csv_header() << ",status\n";
  for (const auto& c : cells) {
    if (c.record) {
      all << csv_row(*c.record) << ",ok\n";
      write_json(*output_dir / ("k" + std::to_string(c.k) + "_w" + std::to_string(c.workers) +
                                "_s" + std::to_string(c.seed) + ".json"),
                 *c.record);
    } else {
      all << csv_field(dataset.name) << ',' << to_string(base.algorithm) << ',' << c.k << ','
          << c.workers << ',' << c.seed << ',' << to_string(base.source.manifest.source_side)
          << ",,,,," << csv_field("error: " + c.error) << '\n';
    }
  }

  // Mean over seeds (and workers / k respectively) of the successful cells.
  std::map<std::size_t, std::pair<double, int>> by_k;
  std::map<unsigned, std::pair<double, int>> by_workers;
  for (const auto& c : cells) {
    if (!c.record) continue;
    auto& pk = by_k[c.k];
    pk.first += static_cast<double>(c.record->probes);
    ++pk.second;
    auto& pw = by_workers[c.workers];
    pw.first += c.record->time_ms;
    ++pw.second;
  }
  std::ofstream probes_vs_k(*output_dir / "probes_vs_k.csv");
  probes_vs_k << "k,mean_probes,runs\n";
  for (const auto& [k, acc] : by_k) {
    probes_vs_k << k << ',' << format_ms(acc.first / acc.second) << ',' << acc.second << '\n';
  }
  std::ofstream time_vs_workers(*output_dir / "time_vs_workers.csv");
  time_vs_workers << "workers,mean_time_ms,runs\n";
  for (const auto& [w, acc] : by_workers) {
    time_vs_workers << w << ',' << format_ms(acc.first / acc.second) << ',' << acc.second << '\n';
  }
  return cells;
}

CompareReport compare(const ExperimentRecord& a, const ExperimentRecord& b) {
  CompareReport report;
  std::ostringstream os;
  if (a.dataset != b.dataset || a.k != b.k || a.source_side != b.source_side) {
    report.compatible = false;
    os << "incompatible records: (" << a.dataset << ", k=" << a.k << ", side=" << a.source_side
       << ") vs (" << b.dataset << ", k=" << b.k << ", side=" << b.source_side << ")\n";
    report.text = os.str();
    return report;
  }
  auto strip = [](const std::vector<LabeledVertex>& v) {
    std::vector<std::pair<VertexId, Degree>> out;
    for (const auto& e : v) out.emplace_back(e.vertex, e.degree);
    return out;
  };
  report.results_equal = strip(a.result) == strip(b.result);
  report.probe_delta = static_cast<std::int64_t>(b.probes) - static_cast<std::int64_t>(a.probes);
  report.time_delta_ms = b.time_ms - a.time_ms;

  if (!report.results_equal) {
    os << "result mismatch: " << a.algorithm << " returned " << a.result.size() << " entries, "
       << b.algorithm << " returned " << b.result.size() << "\n";
    const std::size_t n = std::max(a.result.size(), b.result.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto* x = i < a.result.size() ? &a.result[i] : nullptr;
      const auto* y = i < b.result.size() ? &b.result[i] : nullptr;
      if (x && y && x->vertex == y->vertex && x->degree == y->degree) continue;
      os << "  rank " << i + 1 << ": "
         << (x ? x->label + "(" + std::to_string(x->degree) + ")" : std::string("-")) << " vs "
         << (y ? y->label + "(" + std::to_string(y->degree) + ")" : std::string("-")) << "\n";
    }
  }
  if (report.probe_delta != 0 || report.time_delta_ms != 0.0) {
    os << "probes: " << a.probes << " -> " << b.probes << " (" << std::showpos
       << report.probe_delta << std::noshowpos << ")\n";
    os << "time_ms: " << format_ms(a.time_ms) << " -> " << format_ms(b.time_ms) << "\n";
  }
  report.text = os.str();
  return report;
}

}  // namespace hidden_topk::bench
