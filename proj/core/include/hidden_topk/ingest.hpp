#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hidden_topk/graph.hpp"

namespace hidden_topk {

enum class DatasetFormat { kKonectBipartite, kEdgelistUnipartite };
enum class SourceSide { kBlack, kWhite };

DatasetFormat parse_dataset_format(std::string_view text);
std::string_view to_string(DatasetFormat format);
SourceSide parse_source_side(std::string_view text);
std::string_view to_string(SourceSide side);

/// Unreadable or malformed input. `line()` is 1-based, 0 when not tied to a line.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what, std::uint64_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

struct DatasetManifest {
  std::string name;
  std::filesystem::path path;
  DatasetFormat format = DatasetFormat::kKonectBipartite;
  std::optional<VertexId> n_black;
  std::optional<VertexId> n_white;
  std::optional<std::uint64_t> edges;
  SourceSide source_side = SourceSide::kBlack;
};

struct LoadReport {
  std::uint64_t lines = 0;
  std::uint64_t duplicate_edges = 0;
  std::uint64_t self_loops_dropped = 0;
  std::vector<std::string> warnings;
};

struct LoadedGraph {
  BipartiteGraph graph;
  LoadReport report;
};

/// KONECT bipartite edge list: '%' starts a comment line, each other
/// non-blank line holds "<black> <white> [ignored columns...]" with 1-based
/// ids per side. Side sizes are the largest ids seen, or the sizes from a
/// KONECT "% <edges> <n_black> <n_white>" header when that is larger. Files
/// ending in .gz are decompressed on the fly. With SourceSide::kWhite the
/// result is transposed.
LoadedGraph load_konect(const std::filesystem::path& path,
                        SourceSide source_side = SourceSide::kBlack);

/// Undirected edge list in the same syntax over a single id space, cloned
/// into its bipartite double cover. Self-loops are dropped with a warning.
LoadedGraph load_unipartite_as_bipartite(const std::filesystem::path& path);

/// Loads per the manifest and checks any declared counts; a mismatch throws
/// DataError rather than being corrected.
LoadedGraph load_dataset(const DatasetManifest& manifest);

/// Writes the graph as a KONECT bipartite edge list (1-based ids) including
/// the size header, so isolated trailing vertices survive a reload.
void write_konect(const BipartiteGraph& graph, const std::filesystem::path& path);

}  // namespace hidden_topk
