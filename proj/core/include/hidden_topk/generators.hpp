#pragma once

#include <cstdint>

#include "hidden_topk/graph.hpp"

namespace hidden_topk {

/// Erdos-Renyi style bipartite graph: each (b, w) pair is present
/// independently with `edge_probability`. Deterministic for a given seed.
BipartiteGraph generate_random(VertexId n_black, VertexId n_white,
                               double edge_probability, std::uint64_t seed);

/// Skewed bipartite graph. Black degrees follow a discrete power law with the
/// given exponent (> 1), truncated at n_white and scaled so that the expected
/// degree equals `mean_degree`; neighbours are drawn uniformly without
/// replacement.
BipartiteGraph generate_powerlaw(VertexId n_black, VertexId n_white, double exponent,
                                 double mean_degree, std::uint64_t seed);

/// Expected degree of the truncated power law for the given scale. Exposed for
/// testing the calibration.
double powerlaw_expected_degree(VertexId n_white, double exponent, double scale);

}  // namespace hidden_topk
