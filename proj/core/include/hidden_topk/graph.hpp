#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hidden_topk {

/// Dense 0-based vertex id, numbered independently on each side.
using VertexId = std::uint32_t;
using Degree = std::uint32_t;
using ProbeCount = std::uint64_t;

/// Thrown when a vertex id falls outside its side's range.
class IdRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Edge {
  VertexId black;
  VertexId white;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected edge of a unipartite graph.
struct UndirectedEdge {
  VertexId u;
  VertexId v;
};

/// Materialized ground truth behind a hidden graph.
///
/// Adjacency is kept in CSR form: one sorted, duplicate-free run of white
/// neighbours per black vertex. The graph is immutable once built and may be
/// shared across threads without synchronization.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds the graph from an edge list. Duplicate edges are collapsed; the
  /// number removed is written to `duplicates` when it is non-null.
  static BipartiteGraph from_edges(VertexId n_black, VertexId n_white,
                                   std::vector<Edge> edges,
                                   std::size_t* duplicates = nullptr);

  /// Builds the graph from per-black-vertex neighbour lists (any order).
  static BipartiteGraph from_adjacency(
      VertexId n_white, const std::vector<std::vector<VertexId>>& adjacency,
      std::size_t* duplicates = nullptr);

  VertexId n_black() const noexcept { return n_black_; }
  VertexId n_white() const noexcept { return n_white_; }
  std::uint64_t edge_count() const noexcept { return targets_.size(); }

  std::span<const VertexId> neighbors(VertexId b) const;
  Degree degree(VertexId b) const;
  bool has_edge(VertexId b, VertexId w) const;

  /// Unchecked lookup; both ids must be in range.
  bool has_edge_unchecked(VertexId b, VertexId w) const noexcept;

  Degree max_degree() const noexcept;

  /// All edges in (black, white) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  VertexId n_black_ = 0;
  VertexId n_white_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> targets_;
};

/// Exact degree straight from the ground truth. Never counts as a probe and
/// must not be reachable from the discovery algorithms.
Degree true_degree(const BipartiteGraph& graph, VertexId b);

/// Transpose: white vertices become black and vice versa.
BipartiteGraph swap_sides(const BipartiteGraph& graph);

/// Bipartite double cover of an undirected simple graph on `n` vertices:
/// B and W are both copies of the vertex set and (b_i, w_j) is an edge iff
/// {i, j} is. Self-loops throw std::invalid_argument; repeated edges collapse.
BipartiteGraph clone_to_bipartite(VertexId n, std::span<const UndirectedEdge> edges);

}  // namespace hidden_topk
