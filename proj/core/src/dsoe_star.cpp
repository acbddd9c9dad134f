#include "hidden_topk/dsoe_star.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hidden_topk/probing.hpp"
#include "live_set.hpp"
#include "sampling.hpp"

namespace hidden_topk {

std::uint32_t loglog_sample_size(VertexId n_white) {
  if (n_white == 0) return 0;
  // ln(ln(n)) is undefined or non-positive up to n = e.
  const double inner = std::log(static_cast<double>(n_white));
  std::uint32_t size = 1;
  if (inner > 1.0) size = static_cast<std::uint32_t>(std::ceil(std::log(inner)));
  return std::clamp<std::uint32_t>(size, 1, n_white);
}

SampleSizeRule parse_sample_rule(std::string_view text) {
  if (text == "loglog") return loglog_sample_size;
  constexpr std::string_view kFixed = "fixed:";
  if (text.starts_with(kFixed)) {
    std::uint32_t n = 0;
    const auto digits = text.substr(kFixed.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n > 0) {
      return [n](VertexId) { return n; };
    }
  }
  throw std::invalid_argument("unknown sample rule '" + std::string(text) +
                              "' (expected loglog or fixed:<n>)");
}

BudgetRule parse_budget_rule(std::string_view text) {
  if (text == "plus-one") return [](Degree p) { return std::uint64_t{p} + 1; };
  if (text == "double-plus-one") return [](Degree p) { return 2 * std::uint64_t{p} + 1; };
  throw std::invalid_argument("unknown budget rule '" + std::string(text) +
                              "' (expected plus-one or double-plus-one)");
}

void DsoeStarConfig::validate() const {
  if (!sample_size_rule) throw std::invalid_argument("sample size rule is empty");
  if (!budget_rule) throw std::invalid_argument("budget rule is empty");
}

std::uint32_t DsoeStarConfig::sample_size(VertexId n_white) const {
  if (n_white == 0) return 0;
  return std::clamp<std::uint32_t>(sample_size_rule(n_white), 1, n_white);
}

std::uint64_t prediction_seed(std::uint64_t run_seed, VertexId vertex) noexcept {
  return run_seed ^ vertex;
}

void predict(VertexState& state, ProbeOracle& oracle, std::uint32_t sample_size,
             std::uint64_t seed) {
  const VertexId n_white = oracle.n_white();
  std::mt19937_64 rng(detail::splitmix64(seed));
  state.sampled = detail::sample_distinct(n_white, std::min(sample_size, n_white), rng);
  state.prediction = 0;
  for (VertexId w : state.sampled) {
    if (oracle.probe(state.vertex, w)) {
      ++state.s;
      ++state.prediction;
    } else {
      ++state.e;
    }
  }
  state.done = state.s + state.e == n_white;
}

void star_routine(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
                  std::uint64_t budget) {
  std::uint64_t negatives = 0;
  while (!state.done && negatives < budget) {
    if (!probe_next(state, oracle, order)) ++negatives;
  }
}

TopKOutcome dsoe_star_topk(ProbeOracle& oracle, std::size_t k, const DsoeStarConfig& config,
                           Executor& executor, const ProbeOrder& order) {
  config.validate();
  const ProbeCount probes_before = oracle.probes();
  detail::LiveSet set(oracle, k);
  std::vector<RoundStats> rounds;

  std::uint32_t round = 0;
  set.collect(round);
  if (!set.empty()) {
    const std::uint32_t sample = config.sample_size(oracle.n_white());
    ++round;
    RoundStats stats = executor.parallel_map(set.live(), oracle, [&](VertexState& s) {
      predict(s, oracle, sample, prediction_seed(config.seed, s.vertex));
    });
    stats.round = round;
    stats.phase = "predict";
    rounds.push_back(std::move(stats));
    set.collect(round);
  }

  while (!set.has_kth() && !set.empty()) {
    ++round;
    RoundStats stats = executor.parallel_map(set.live(), oracle, [&](VertexState& s) {
      star_routine(s, oracle, order, std::max<std::uint64_t>(1, config.budget_rule(s.prediction)));
    });
    stats.round = round;
    stats.phase = "routine";
    rounds.push_back(std::move(stats));
    set.collect(round);
  }

  if (!set.empty()) {
    const Degree threshold = set.kth();
    ++round;
    RoundStats stats = executor.parallel_map(
        set.live(), oracle, [&](VertexState& s) { exhaust(s, oracle, order, threshold); });
    stats.round = round;
    stats.phase = "exhaust";
    stats.threshold = threshold;
    rounds.push_back(std::move(stats));
    set.collect(round, threshold);
    set.prune_below(threshold);
  }
  return set.finish(probes_before, std::move(rounds));
}

}  // namespace hidden_topk
