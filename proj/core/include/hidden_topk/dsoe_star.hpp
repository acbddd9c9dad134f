#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

#include "hidden_topk/executor.hpp"
#include "hidden_topk/outcome.hpp"
#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

/// Per-vertex sample size as a function of n_w.
using SampleSizeRule = std::function<std::uint32_t(VertexId n_white)>;
/// Negative-probe budget N of a routine call as a function of the prediction.
using BudgetRule = std::function<std::uint64_t(Degree prediction)>;

/// ceil(ln(ln(n_w))), at least 1 and at most n_w.
std::uint32_t loglog_sample_size(VertexId n_white);

/// Rules by name: "loglog" or "fixed:<n>" for sampling, "plus-one" (N = p + 1)
/// or "double-plus-one" (N = 2p + 1) for budgets.
SampleSizeRule parse_sample_rule(std::string_view text);
BudgetRule parse_budget_rule(std::string_view text);

struct DsoeStarConfig {
  SampleSizeRule sample_size_rule = loglog_sample_size;
  BudgetRule budget_rule = [](Degree prediction) { return std::uint64_t{prediction} + 1; };
  std::uint64_t seed = 0;

  void validate() const;
  /// The rule's value clamped to [min(1, n_w), n_w].
  std::uint32_t sample_size(VertexId n_white) const;
};

/// Probes `sample_size` distinct white vertices drawn uniformly without
/// replacement from a generator seeded with `seed`, and sets the prediction
/// to the number of hits. The sampled pairs are remembered in the state so
/// later phases never repeat them. Requires a fresh state.
void predict(VertexState& state, ProbeOracle& oracle, std::uint32_t sample_size,
             std::uint64_t seed);

/// Probes in order, skipping sampled vertices, until `budget` negatives have
/// been seen in this call or W is exhausted.
void star_routine(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
                  std::uint64_t budget);

/// Seed used for one vertex's prediction sample. Depends only on the run seed
/// and the vertex id, never on partitioning.
std::uint64_t prediction_seed(std::uint64_t run_seed, VertexId vertex) noexcept;

/// DSOE*: predict every degree from a small random sample, run budgeted
/// routines until at least k vertices are fully probed (the set M), then take
/// T as the k-th highest degree in M and exhaust-or-prune the rest against
/// it. Returns the tie-closed top-k of M.
TopKOutcome dsoe_star_topk(ProbeOracle& oracle, std::size_t k, const DsoeStarConfig& config,
                           Executor& executor, const ProbeOrder& order);

inline TopKOutcome dsoe_star_topk(ProbeOracle& oracle, std::size_t k,
                                  const DsoeStarConfig& config, Executor& executor) {
  return dsoe_star_topk(oracle, k, config, executor, ProbeOrder(oracle.n_white()));
}

}  // namespace hidden_topk
