#include "hidden_topk/graph.hpp"

#include <algorithm>
#include <string>

namespace hidden_topk {

namespace {

void check_black(const BipartiteGraph& g, VertexId b) {
  if (b >= g.n_black()) {
    throw IdRangeError("black vertex " + std::to_string(b) + " out of range [0, " +
                       std::to_string(g.n_black()) + ")");
  }
}

}  // namespace

BipartiteGraph BipartiteGraph::from_edges(VertexId n_black, VertexId n_white,
                                          std::vector<Edge> edges,
                                          std::size_t* duplicates) {
  for (const Edge& e : edges) {
    if (e.black >= n_black || e.white >= n_white) {
      throw IdRangeError("edge (" + std::to_string(e.black) + ", " +
                         std::to_string(e.white) + ") outside " +
                         std::to_string(n_black) + "x" + std::to_string(n_white));
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  if (duplicates != nullptr) {
    *duplicates = static_cast<std::size_t>(edges.end() - last);
  }
  edges.erase(last, edges.end());

  BipartiteGraph g;
  g.n_black_ = n_black;
  g.n_white_ = n_white;
  g.offsets_.assign(static_cast<std::size_t>(n_black) + 1, 0);
  g.targets_.reserve(edges.size());
  for (const Edge& e : edges) {
    ++g.offsets_[e.black + 1];
    g.targets_.push_back(e.white);
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  return g;
}

BipartiteGraph BipartiteGraph::from_adjacency(
    VertexId n_white, const std::vector<std::vector<VertexId>>& adjacency,
    std::size_t* duplicates) {
  BipartiteGraph g;
  g.n_black_ = static_cast<VertexId>(adjacency.size());
  g.n_white_ = n_white;
  g.offsets_.assign(adjacency.size() + 1, 0);
  std::size_t removed = 0;
  for (std::size_t b = 0; b < adjacency.size(); ++b) {
    std::vector<VertexId> row = adjacency[b];
    std::sort(row.begin(), row.end());
    const auto last = std::unique(row.begin(), row.end());
    removed += static_cast<std::size_t>(row.end() - last);
    row.erase(last, row.end());
    if (!row.empty() && row.back() >= n_white) {
      throw IdRangeError("white vertex " + std::to_string(row.back()) +
                         " out of range [0, " + std::to_string(n_white) + ")");
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    g.offsets_[b + 1] = g.targets_.size();
  }
  if (duplicates != nullptr) *duplicates = removed;
  return g;
}

std::span<const VertexId> BipartiteGraph::neighbors(VertexId b) const {
  check_black(*this, b);
  return {targets_.data() + offsets_[b], targets_.data() + offsets_[b + 1]};
}

Degree BipartiteGraph::degree(VertexId b) const {
  check_black(*this, b);
  return static_cast<Degree>(offsets_[b + 1] - offsets_[b]);
}

bool BipartiteGraph::has_edge(VertexId b, VertexId w) const {
  check_black(*this, b);
  if (w >= n_white_) {
    throw IdRangeError("white vertex " + std::to_string(w) + " out of range [0, " +
                       std::to_string(n_white_) + ")");
  }
  return has_edge_unchecked(b, w);
}

bool BipartiteGraph::has_edge_unchecked(VertexId b, VertexId w) const noexcept {
  const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[b]);
  const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[b + 1]);
  return std::binary_search(first, last, w);
}

Degree BipartiteGraph::max_degree() const noexcept {
  std::uint64_t best = 0;
  for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
    best = std::max(best, offsets_[b + 1] - offsets_[b]);
  }
  return static_cast<Degree>(best);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(targets_.size());
  for (VertexId b = 0; b < n_black_; ++b) {
    for (std::uint64_t i = offsets_[b]; i < offsets_[b + 1]; ++i) {
      out.push_back({b, targets_[i]});
    }
  }
  return out;
}

Degree true_degree(const BipartiteGraph& graph, VertexId b) { return graph.degree(b); }

BipartiteGraph swap_sides(const BipartiteGraph& graph) {
  std::vector<Edge> flipped;
  flipped.reserve(graph.edge_count());
  for (VertexId b = 0; b < graph.n_black(); ++b) {
    for (VertexId w : graph.neighbors(b)) flipped.push_back({w, b});
  }
  return BipartiteGraph::from_edges(graph.n_white(), graph.n_black(), std::move(flipped));
}

BipartiteGraph clone_to_bipartite(VertexId n, std::span<const UndirectedEdge> edges) {
  std::vector<Edge> doubled;
  doubled.reserve(edges.size() * 2);
  for (const UndirectedEdge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    doubled.push_back({e.u, e.v});
    doubled.push_back({e.v, e.u});
  }
  return BipartiteGraph::from_edges(n, n, std::move(doubled));
}

}  // namespace hidden_topk
