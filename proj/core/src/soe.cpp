#include "hidden_topk/soe.hpp"

#include "hidden_topk/probing.hpp"
#include "live_set.hpp"

namespace hidden_topk {

TopKOutcome soe_topk(ProbeOracle& oracle, std::size_t k, const ProbeOrder& order) {
  const ProbeCount probes_before = oracle.probes();
  detail::LiveSet set(oracle, k);
  std::vector<RoundStats> rounds;

  std::uint32_t round = 0;
  set.collect(round);
  while (!set.empty()) {
    if (set.has_kth() && set.max_upper_bound() < set.kth()) {
      set.prune_below(set.kth());
      break;
    }

    ++round;
    RoundStats stats;
    stats.round = round;
    stats.phase = "soe";
    const auto started = std::chrono::steady_clock::now();
    const ProbeCount at_start = oracle.probes();
    for (VertexState& state : set.live()) {
      // One failure per vertex per round, then switch.
      while (!state.done && probe_next(state, oracle, order)) {
      }
      stats.completed += state.done ? 1 : 0;
    }
    stats.probes = oracle.probes() - at_start;
    stats.wall = std::chrono::steady_clock::now() - started;
    rounds.push_back(std::move(stats));
    set.collect(round);
  }
  return set.finish(probes_before, std::move(rounds));
}

}  // namespace hidden_topk
