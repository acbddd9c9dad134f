#include "hidden_topk/reference.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace hidden_topk {

ResultSet brute_force_topk(const BipartiteGraph& graph, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::vector<RankedVertex> all;
  all.reserve(graph.n_black());
  for (VertexId b = 0; b < graph.n_black(); ++b) {
    // Count by scanning every pair, as an exhaustive prober would.
    Degree d = 0;
    for (VertexId w = 0; w < graph.n_white(); ++w) d += graph.has_edge(b, w) ? 1 : 0;
    all.push_back({b, d});
  }
  return ResultSet::top_k_of(std::move(all), k, graph.n_black());
}

Degree kth_degree(const BipartiteGraph& graph, std::size_t k) {
  if (k == 0 || k > graph.n_black()) {
    throw std::out_of_range("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(graph.n_black()) + "]");
  }
  std::vector<Degree> degrees(graph.n_black());
  for (VertexId b = 0; b < graph.n_black(); ++b) degrees[b] = graph.degree(b);
  std::nth_element(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   degrees.end(), std::greater<>());
  return degrees[k - 1];
}

}  // namespace hidden_topk
