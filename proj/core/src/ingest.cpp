#include "hidden_topk/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <fstream>
#include <memory>

namespace hidden_topk {

DatasetFormat parse_dataset_format(std::string_view text) {
  if (text == "konect-bipartite" || text == "konect") return DatasetFormat::kKonectBipartite;
  if (text == "edgelist-unipartite" || text == "unipartite") {
    return DatasetFormat::kEdgelistUnipartite;
  }
  throw std::invalid_argument("unknown dataset format '" + std::string(text) + "'");
}

std::string_view to_string(DatasetFormat format) {
  return format == DatasetFormat::kKonectBipartite ? "konect-bipartite" : "edgelist-unipartite";
}

SourceSide parse_source_side(std::string_view text) {
  if (text == "b" || text == "B") return SourceSide::kBlack;
  if (text == "w" || text == "W") return SourceSide::kWhite;
  throw std::invalid_argument("source side must be b or w, got '" + std::string(text) + "'");
}

std::string_view to_string(SourceSide side) { return side == SourceSide::kBlack ? "b" : "w"; }

namespace {

/// Line reader over zlib, which also passes plain files through unchanged.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path)
      : file_(gzopen(path.c_str(), "rb"), &gzclose) {
    if (!file_) throw DataError("cannot open " + path.string());
    gzbuffer(file_.get(), 1 << 17);
  }

  bool next(std::string& line) {
    line.clear();
    std::array<char, 1 << 14> buf{};
    while (gzgets(file_.get(), buf.data(), static_cast<int>(buf.size())) != nullptr) {
      line.append(buf.data());
      if (!line.empty() && line.back() == '\n') {
        line.pop_back();
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
      }
    }
    int err = Z_OK;
    const char* msg = gzerror(file_.get(), &err);
    if (err != Z_OK && err != Z_STREAM_END) throw DataError(std::string("read error: ") + msg);
    return !line.empty();
  }

 private:
  std::unique_ptr<gzFile_s, decltype(&gzclose)> file_;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

struct RawEdges {
  std::vector<Edge> edges;  // 0-based
  VertexId max_first = 0;   // largest 1-based id seen in column 1
  VertexId max_second = 0;
  std::vector<std::uint64_t> header;  // "% m n1 [n2]" when present
  LoadReport report;
};

RawEdges read_edges(const std::filesystem::path& path) {
  RawEdges raw;
  LineReader reader(path);
  std::string line;
  std::uint64_t line_no = 0;
  while (reader.next(line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.front() == '%') {
      if (raw.header.empty()) {
        std::vector<std::uint64_t> numbers;
        const auto tokens = tokenize(view.substr(1));
        for (auto t : tokens) {
          if (auto v = parse_uint(t)) numbers.push_back(*v);
        }
        if ((numbers.size() == 2 || numbers.size() == 3) && numbers.size() == tokens.size()) {
          raw.header = std::move(numbers);
        }
      }
      continue;
    }
    const auto tokens = tokenize(view);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) throw DataError("expected two vertex ids", line_no);
    const auto a = parse_uint(tokens[0]);
    const auto b = parse_uint(tokens[1]);
    if (!a || !b) throw DataError("non-integer vertex id", line_no);
    constexpr std::uint64_t kMaxId = std::numeric_limits<VertexId>::max();
    if (*a == 0 || *b == 0 || *a > kMaxId || *b > kMaxId) {
      throw DataError("vertex ids must lie in [1, " + std::to_string(kMaxId) + "]", line_no);
    }
    raw.max_first = std::max(raw.max_first, static_cast<VertexId>(*a));
    raw.max_second = std::max(raw.max_second, static_cast<VertexId>(*b));
    raw.edges.push_back({static_cast<VertexId>(*a - 1), static_cast<VertexId>(*b - 1)});
  }
  raw.report.lines = line_no;
  if (raw.edges.empty()) raw.report.warnings.push_back("no edges in " + path.string());
  return raw;
}

VertexId header_size(const std::vector<std::uint64_t>& header, std::size_t index) {
  if (index >= header.size()) return 0;
  return static_cast<VertexId>(
      std::min<std::uint64_t>(header[index], std::numeric_limits<VertexId>::max()));
}

}  // namespace

LoadedGraph load_konect(const std::filesystem::path& path, SourceSide source_side) {
  RawEdges raw = read_edges(path);
  const VertexId n_black = std::max(raw.max_first, header_size(raw.header, 1));
  const VertexId n_white = std::max(raw.max_second, header_size(raw.header, 2));
  std::size_t duplicates = 0;
  LoadedGraph out{BipartiteGraph::from_edges(n_black, n_white, std::move(raw.edges), &duplicates),
                  std::move(raw.report)};
  out.report.duplicate_edges = duplicates;
  if (duplicates > 0) {
    out.report.warnings.push_back(std::to_string(duplicates) + " duplicate edges removed");
  }
  if (source_side == SourceSide::kWhite) out.graph = swap_sides(out.graph);
  return out;
}

LoadedGraph load_unipartite_as_bipartite(const std::filesystem::path& path) {
  RawEdges raw = read_edges(path);
  const VertexId n = std::max({raw.max_first, raw.max_second, header_size(raw.header, 1),
                               header_size(raw.header, 2)});
  std::vector<UndirectedEdge> edges;
  edges.reserve(raw.edges.size());
  std::uint64_t loops = 0;
  for (const Edge& e : raw.edges) {
    if (e.black == e.white) {
      ++loops;
      continue;
    }
    edges.push_back({e.black, e.white});
  }
  // Each undirected edge appears twice in the clone; count repeats in that space.
  const std::uint64_t doubled = 2 * static_cast<std::uint64_t>(edges.size());
  LoadedGraph out{clone_to_bipartite(n, edges), std::move(raw.report)};
  out.report.self_loops_dropped = loops;
  out.report.duplicate_edges = (doubled - out.graph.edge_count()) / 2;
  if (loops > 0) out.report.warnings.push_back(std::to_string(loops) + " self-loops dropped");
  if (out.report.duplicate_edges > 0) {
    out.report.warnings.push_back(std::to_string(out.report.duplicate_edges) +
                                  " duplicate edges removed");
  }
  return out;
}

LoadedGraph load_dataset(const DatasetManifest& manifest) {
  LoadedGraph loaded = manifest.format == DatasetFormat::kKonectBipartite
                           ? load_konect(manifest.path, manifest.source_side)
                           : load_unipartite_as_bipartite(manifest.path);
  if (manifest.format == DatasetFormat::kEdgelistUnipartite &&
      manifest.source_side == SourceSide::kWhite) {
    loaded.graph = swap_sides(loaded.graph);
  }
  const auto& g = loaded.graph;
  auto mismatch = [&](std::string_view what, std::uint64_t declared, std::uint64_t actual) {
    throw DataError(manifest.name + ": declared " + std::string(what) + " " +
                    std::to_string(declared) + " but loaded " + std::to_string(actual));
  };
  if (manifest.n_black && *manifest.n_black != g.n_black()) {
    mismatch("n_b", *manifest.n_black, g.n_black());
  }
  if (manifest.n_white && *manifest.n_white != g.n_white()) {
    mismatch("n_w", *manifest.n_white, g.n_white());
  }
  if (manifest.edges && *manifest.edges != g.edge_count()) {
    mismatch("m", *manifest.edges, g.edge_count());
  }
  return loaded;
}

void write_konect(const BipartiteGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "% bip unweighted\n";
  out << "% " << graph.edge_count() << ' ' << graph.n_black() << ' ' << graph.n_white() << '\n';
  for (VertexId b = 0; b < graph.n_black(); ++b) {
    for (VertexId w : graph.neighbors(b)) out << b + 1 << ' ' << w + 1 << '\n';
  }
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace hidden_topk
