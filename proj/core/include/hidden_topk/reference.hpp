#pragma once

#include <cstddef>

#include "hidden_topk/graph.hpp"
#include "hidden_topk/result_set.hpp"

namespace hidden_topk {

/// Exhaustive answer computed straight from the ground truth; issues no
/// probes. This is the equivalence target for every discovery algorithm.
/// k must be >= 1; k > n_b returns every black vertex with the flag set.
ResultSet brute_force_topk(const BipartiteGraph& graph, std::size_t k);

/// k-th largest true degree, counted with multiplicity. 1 <= k <= n_b.
Degree kth_degree(const BipartiteGraph& graph, std::size_t k);

}  // namespace hidden_topk
