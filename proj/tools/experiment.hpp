#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hidden_topk/dsoe.hpp"
#include "hidden_topk/executor.hpp"
#include "hidden_topk/graph.hpp"
#include "hidden_topk/ingest.hpp"
#include "hidden_topk/outcome.hpp"

namespace hidden_topk::bench {

inline constexpr int kSchemaVersion = 1;

enum class Algorithm { kSoe, kDsoe, kDsoeStar };
Algorithm parse_algorithm(std::string_view text);
std::string_view to_string(Algorithm algorithm);

/// Raised when a finished run fails its own consistency checks.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where the graph comes from: a dataset file, or a generator spec of the
/// form "powerlaw:<n_b>:<n_w>:<exponent>:<mean_degree>:<seed>" or
/// "uniform:<n_b>:<n_w>:<probability>:<seed>".
struct GraphSource {
  DatasetManifest manifest;
  std::optional<std::string> generator;
};

struct RunConfig {
  GraphSource source;
  Algorithm algorithm = Algorithm::kDsoeStar;
  std::size_t k = 10;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::chrono::microseconds probe_delay{0};
  DsoeConfig dsoe;
  std::string sample_rule = "loglog";
  std::string budget_rule = "plus-one";
  std::optional<std::uint64_t> order_seed;
  Scheduling scheduling = Scheduling::kStatic;
  bool audit = false;
};

struct LabeledVertex {
  VertexId vertex;
  std::string label;
  Degree degree;

  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

struct ExperimentRecord {
  std::string dataset;
  std::string algorithm;
  std::size_t k = 0;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string source_side = "b";
  VertexId n_black = 0;
  VertexId n_white = 0;
  std::uint64_t edges = 0;
  ProbeCount probes = 0;
  double time_ms = 0.0;
  bool k_exceeds_population = false;
  std::vector<RoundStats> rounds;
  std::vector<LabeledVertex> result;
  nlohmann::json config;

  std::size_t result_size() const noexcept { return result.size(); }
  Degree top_degree() const noexcept { return result.empty() ? 0 : result.front().degree; }
};

struct Dataset {
  std::string name;
  BipartiteGraph graph;
  /// Offset added to a dense id to recover the external label (1 for KONECT
  /// files, 0 for generated graphs).
  VertexId label_base = 0;
  LoadReport report;
};

/// Builds a graph from a generator spec; throws std::invalid_argument on a
/// malformed spec.
BipartiteGraph generate_from_spec(std::string_view spec);

Dataset load_source(const GraphSource& source);

/// Runs one algorithm on an already loaded graph. Wall time covers the
/// algorithm only. Throws InvariantViolation if the outcome fails validation.
ExperimentRecord run_on(const Dataset& dataset, const RunConfig& config);

/// Raw algorithm dispatch, without record building or validation.
TopKOutcome run_algorithm(const BipartiteGraph& graph, const RunConfig& config,
                          ProbeOracle& oracle);

/// Tie-closure and probe-bound checks applied to every record before it is
/// written. Returns an empty string when the record is consistent.
std::string validate_record(const ExperimentRecord& record);

nlohmann::json to_json(const ExperimentRecord& record);
ExperimentRecord record_from_json(const nlohmann::json& j);

/// CSV columns: dataset,algorithm,k,workers,seed,source_side,probes,time_ms,
/// result_size,top_degree
std::string csv_header();
std::string csv_row(const ExperimentRecord& record);
/// Appends a row, writing the header first when the file is new or empty.
void append_csv(const std::filesystem::path& path, const ExperimentRecord& record);

void write_json(const std::filesystem::path& path, const ExperimentRecord& record);
ExperimentRecord read_json(const std::filesystem::path& path);

struct SweepCell {
  std::size_t k;
  unsigned workers;
  std::uint64_t seed;
  std::optional<ExperimentRecord> record;
  std::string error;
};

/// Cross product of k, worker and seed values, run sequentially on one loaded
/// graph. Failed cells are kept with their error message. When `output_dir`
/// is given, writes sweep.csv (the run columns plus a status column),
/// probes_vs_k.csv, time_vs_workers.csv and one JSON record per cell.
std::vector<SweepCell> sweep(const RunConfig& base, const std::vector<std::size_t>& k_values,
                             const std::vector<unsigned>& worker_values,
                             const std::vector<std::uint64_t>& seeds,
                             const std::optional<std::filesystem::path>& output_dir);

struct CompareReport {
  bool compatible = true;
  bool results_equal = false;
  std::int64_t probe_delta = 0;  // b - a
  double time_delta_ms = 0.0;    // b - a
  std::string text;
};

CompareReport compare(const ExperimentRecord& a, const ExperimentRecord& b);

}  // namespace hidden_topk::bench
