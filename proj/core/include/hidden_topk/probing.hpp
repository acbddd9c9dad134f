#pragma once

#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

/// Issues the query for the next unprobed white vertex in `order` and folds
/// the answer into `state`. Requires !state.done.
bool probe_next(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order);

/// Probes while the degree upper bound n_w - e(u) is at least `threshold`.
/// On return the vertex is either done or provably below the threshold.
void exhaust(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
             Degree threshold);

}  // namespace hidden_topk
