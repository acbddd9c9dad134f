#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hidden_topk/outcome.hpp"
#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk::detail {

/// Coordinator-side bookkeeping shared by the three algorithms: the live
/// states still being probed, the pool of vertices with exact degrees, and a
/// running k-th highest exact degree.
class LiveSet {
 public:
  LiveSet(ProbeOracle& oracle, std::size_t k)
      : oracle_(oracle),
        k_(k),
        live_(initial_states(oracle.n_black(), oracle.n_white())),
        completion_round_(oracle.n_black(), 0) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
  }

  std::vector<VertexState>& live() noexcept { return live_; }
  bool empty() const noexcept { return live_.empty(); }
  std::size_t completed() const noexcept { return pool_.size(); }
  bool has_kth() const noexcept { return pool_.size() >= k_; }
  Degree kth() const noexcept { return top_.top(); }

  /// Moves done states into the pool. When `min_degree` is given, completions
  /// below it are discarded instead of pooled.
  void collect(std::uint32_t round, Degree min_degree = 0) {
    if (oracle_.auditing()) {
      for (const auto& s : live_) oracle_.audit_state(s);
    }
    auto keep = std::stable_partition(live_.begin(), live_.end(),
                                      [](const VertexState& s) { return !s.done; });
    for (auto it = keep; it != live_.end(); ++it) {
      completion_round_[it->vertex] = round;
      if (it->s < min_degree) continue;
      pool_.push_back({it->vertex, it->s});
      top_.push(it->s);
      if (top_.size() > k_) top_.pop();
    }
    live_.erase(keep, live_.end());
  }

  /// Drops every remaining live state as provably below `threshold`.
  void prune_below(Degree threshold) {
    for (const auto& s : live_) oracle_.audit_pruned(s.vertex, threshold);
    live_.clear();
  }

  Degree max_upper_bound() const noexcept {
    Degree best = 0;
    for (const auto& s : live_) best = std::max(best, s.upper_bound(oracle_.n_white()));
    return best;
  }

  TopKOutcome finish(ProbeCount probes_before, std::vector<RoundStats> rounds) {
    TopKOutcome out;
    out.result = ResultSet::top_k_of(std::move(pool_), k_, oracle_.n_black());
    out.probes = oracle_.probes() - probes_before;
    out.rounds = std::move(rounds);
    out.completion_round = std::move(completion_round_);
    return out;
  }

 private:
  ProbeOracle& oracle_;
  std::size_t k_;
  std::vector<VertexState> live_;
  std::vector<RankedVertex> pool_;
  std::priority_queue<Degree, std::vector<Degree>, std::greater<>> top_;
  std::vector<std::uint32_t> completion_round_;
};

}  // namespace hidden_topk::detail
