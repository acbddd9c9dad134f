#pragma once

#include <cstdint>
#include <vector>

#include "hidden_topk/executor.hpp"
#include "hidden_topk/result_set.hpp"

namespace hidden_topk {

/// What every top-k discovery run returns.
struct TopKOutcome {
  ResultSet result;
  ProbeCount probes = 0;
  std::vector<RoundStats> rounds;
  /// Round in which each black vertex was fully probed; 0 if it never was.
  std::vector<std::uint32_t> completion_round;
};

}  // namespace hidden_topk
