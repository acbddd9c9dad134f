#include "hidden_topk/probing.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "sampling.hpp"

namespace hidden_topk {

std::vector<VertexState> initial_states(VertexId n_black, VertexId n_white) {
  std::vector<VertexState> states(n_black);
  for (VertexId b = 0; b < n_black; ++b) {
    states[b].vertex = b;
    states[b].done = n_white == 0;
  }
  return states;
}

ProbeOrder ProbeOrder::shuffled(VertexId n_white, std::uint64_t seed) {
  ProbeOrder order(n_white);
  order.permutation_.resize(n_white);
  std::iota(order.permutation_.begin(), order.permutation_.end(), VertexId{0});
  std::mt19937_64 rng(detail::splitmix64(seed ^ 0x5eedULL));
  std::shuffle(order.permutation_.begin(), order.permutation_.end(), rng);
  return order;
}

bool probe_next(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order) {
  assert(!state.done);
  const VertexId n_white = oracle.n_white();
  VertexId w = order.at(state.cursor);
  if (!state.sampled.empty()) {
    while (std::binary_search(state.sampled.begin(), state.sampled.end(), w)) {
      w = order.at(++state.cursor);
    }
  }
  ++state.cursor;
  const bool answer = oracle.probe(state.vertex, w);
  if (answer) {
    ++state.s;
  } else {
    ++state.e;
  }
  state.done = state.s + state.e == n_white;
  return answer;
}

void exhaust(VertexState& state, ProbeOracle& oracle, const ProbeOrder& order,
             Degree threshold) {
  const VertexId n_white = oracle.n_white();
  while (!state.done && state.upper_bound(n_white) >= threshold) {
    probe_next(state, oracle, order);
  }
}

}  // namespace hidden_topk
