#include "hidden_topk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sampling.hpp"

namespace hidden_topk {

BipartiteGraph generate_random(VertexId n_black, VertexId n_white,
                               double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  const std::uint64_t total = static_cast<std::uint64_t>(n_black) * n_white;
  if (edge_probability == 1.0) {
    edges.reserve(total);
    for (VertexId b = 0; b < n_black; ++b) {
      for (VertexId w = 0; w < n_white; ++w) edges.push_back({b, w});
    }
  } else if (edge_probability > 0.0) {
    std::mt19937_64 rng(detail::splitmix64(seed));
    // Gap lengths between successive present pairs are geometric.
    std::geometric_distribution<std::uint64_t> gap(edge_probability);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * edge_probability * 1.1));
    for (std::uint64_t idx = gap(rng); idx < total; idx += gap(rng) + 1) {
      edges.push_back({static_cast<VertexId>(idx / n_white),
                       static_cast<VertexId>(idx % n_white)});
    }
  }
  return BipartiteGraph::from_edges(n_black, n_white, std::move(edges));
}

double powerlaw_expected_degree(VertexId n_white, double exponent, double scale) {
  // Degree is min(n_white, floor(X)) with X Pareto(scale, exponent - 1), so
  // E[degree] = sum_{j=1..n_white} P(X >= j).
  double sum = 0.0;
  for (VertexId j = 1; j <= n_white; ++j) {
    sum += std::min(1.0, std::pow(scale / j, exponent - 1.0));
  }
  return sum;
}

BipartiteGraph generate_powerlaw(VertexId n_black, VertexId n_white, double exponent,
                                 double mean_degree, std::uint64_t seed) {
  if (!(exponent > 1.0)) throw std::invalid_argument("power-law exponent must exceed 1");
  if (!(mean_degree >= 0.0) || mean_degree > n_white) {
    throw std::invalid_argument("mean degree must lie in [0, n_white]");
  }
  std::vector<std::vector<VertexId>> adjacency(n_black);
  if (mean_degree == 0.0 || n_white == 0) {
    return BipartiteGraph::from_adjacency(n_white, adjacency);
  }

  double lo = 0.0;
  double hi = n_white;
  for (int iter = 0; iter < 100; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (powerlaw_expected_degree(n_white, exponent, mid) < mean_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double scale = hi;
  const double tail = 1.0 / (exponent - 1.0);

  std::mt19937_64 rng(detail::splitmix64(seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (VertexId b = 0; b < n_black; ++b) {
    // 1 - U lies in (0, 1], keeping the Pareto draw finite.
    const double x = scale * std::pow(1.0 - unit(rng), -tail);
    const auto degree = static_cast<VertexId>(std::min<double>(n_white, std::floor(x)));
    auto row = detail::sample_distinct(n_white, degree, rng);
    adjacency[b].assign(row.begin(), row.end());
  }
  return BipartiteGraph::from_adjacency(n_white, adjacency);
}

}  // namespace hidden_topk
