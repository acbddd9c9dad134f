#pragma once

#include <cstddef>

#include "hidden_topk/outcome.hpp"
#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

/// Centralized Switch-On-Empty.
///
/// Each round visits every live vertex in id order and probes it until its
/// first failed query (or until W is exhausted), then switches to the next
/// vertex; later rounds resume where the vertex stopped. Fully probed
/// vertices leave the live set with an exact degree. The run stops once
/// every live vertex's upper bound n_w - e(u) is below the k-th highest
/// exact degree, which leaves the tie-closed top-k fully determined.
///
/// Single-threaded by construction.
TopKOutcome soe_topk(ProbeOracle& oracle, std::size_t k, const ProbeOrder& order);

inline TopKOutcome soe_topk(ProbeOracle& oracle, std::size_t k) {
  return soe_topk(oracle, k, ProbeOrder(oracle.n_white()));
}

}  // namespace hidden_topk
