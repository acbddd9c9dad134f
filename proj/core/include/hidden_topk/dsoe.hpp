#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hidden_topk/executor.hpp"
#include "hidden_topk/outcome.hpp"
#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

enum class BudgetMode {
  kPerRound,    // each routine call may see f + 1 fresh failures
  kCumulative,  // a routine call stops once e(u) exceeds f
};

BudgetMode parse_budget_mode(std::string_view text);
std::string_view to_string(BudgetMode mode);

/// Failure-budget schedule. The defaults start at 2 and double every round.
/// growth_factor == 1 keeps the budget fixed and is accepted only in
/// per-round mode (a fixed cumulative cap would stall).
struct DsoeConfig {
  std::uint64_t initial_budget = 2;
  double growth_factor = 2.0;
  BudgetMode budget_mode = BudgetMode::kCumulative;

  void validate() const;
  std::uint64_t next_budget(std::uint64_t f) const;
};

/// Probes successive unprobed white vertices while the failure count is at
/// most f, so the call returns after f + 1 failures or once W is exhausted.
/// Which failures count depends on the mode.
void dsoe_routine(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
                  std::uint64_t f, BudgetMode mode);

/// Distributed Switch-On-Empty.
///
/// Rounds map dsoe_routine over the live vertices with a growing budget and
/// move fully probed vertices into R until |R| >= k. A final exhaust round
/// then uses T, the k-th highest degree in R, to either finish or prune
/// every remaining vertex, which makes the tie-closed answer exact for any
/// budget schedule.
TopKOutcome dsoe_topk(ProbeOracle& oracle, std::size_t k, const DsoeConfig& config,
                      Executor& executor, const ProbeOrder& order);

inline TopKOutcome dsoe_topk(ProbeOracle& oracle, std::size_t k, const DsoeConfig& config,
                             Executor& executor) {
  return dsoe_topk(oracle, k, config, executor, ProbeOrder(oracle.n_white()));
}

}  // namespace hidden_topk
