#include "hidden_topk/dsoe.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hidden_topk/probing.hpp"
#include "live_set.hpp"

namespace hidden_topk {

BudgetMode parse_budget_mode(std::string_view text) {
  if (text == "per-round") return BudgetMode::kPerRound;
  if (text == "cumulative") return BudgetMode::kCumulative;
  throw std::invalid_argument("unknown budget mode '" + std::string(text) +
                              "' (expected per-round or cumulative)");
}

std::string_view to_string(BudgetMode mode) {
  return mode == BudgetMode::kPerRound ? "per-round" : "cumulative";
}

void DsoeConfig::validate() const {
  if (initial_budget < 1) throw std::invalid_argument("initial budget must be at least 1");
  if (!(growth_factor >= 1.0)) throw std::invalid_argument("growth factor must be at least 1");
  if (growth_factor == 1.0 && budget_mode == BudgetMode::kCumulative) {
    throw std::invalid_argument("cumulative budgets need a growth factor above 1");
  }
}

std::uint64_t DsoeConfig::next_budget(std::uint64_t f) const {
  if (growth_factor == 1.0) return f;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max() / 4;
  const double grown = std::ceil(static_cast<double>(f) * growth_factor);
  if (grown >= static_cast<double>(kMax)) return kMax;
  return std::max(f + 1, static_cast<std::uint64_t>(grown));
}

void dsoe_routine(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
                  std::uint64_t f, BudgetMode mode) {
  if (mode == BudgetMode::kPerRound) {
    std::uint64_t failures = 0;
    while (!state.done && failures <= f) {
      if (!probe_next(state, oracle, order)) ++failures;
    }
  } else {
    while (!state.done && state.e <= f) probe_next(state, oracle, order);
  }
}

TopKOutcome dsoe_topk(ProbeOracle& oracle, std::size_t k, const DsoeConfig& config,
                      Executor& executor, const ProbeOrder& order) {
  config.validate();
  const ProbeCount probes_before = oracle.probes();
  detail::LiveSet set(oracle, k);
  std::vector<RoundStats> rounds;

  std::uint32_t round = 0;
  set.collect(round);
  std::uint64_t f = config.initial_budget;
  while (!set.has_kth() && !set.empty()) {
    ++round;
    RoundStats stats = executor.parallel_map(set.live(), oracle, [&](VertexState& s) {
      dsoe_routine(s, oracle, order, f, config.budget_mode);
    });
    stats.round = round;
    stats.phase = "routine";
    stats.budget = f;
    rounds.push_back(std::move(stats));
    set.collect(round);
    f = config.next_budget(f);
  }

  if (!set.empty()) {
    const Degree threshold = set.kth();
    ++round;
    RoundStats stats = executor.parallel_map(
        set.live(), oracle, [&](VertexState& s) { exhaust(s, oracle, order, threshold); });
    stats.round = round;
    stats.phase = "final";
    stats.threshold = threshold;
    rounds.push_back(std::move(stats));
    set.collect(round, threshold);
    set.prune_below(threshold);
  }
  return set.finish(probes_before, std::move(rounds));
}

}  // namespace hidden_topk
