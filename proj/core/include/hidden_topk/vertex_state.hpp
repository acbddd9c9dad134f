#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hidden_topk/graph.hpp"

namespace hidden_topk {

/// Probing bookkeeping for one black vertex.
///
/// `s` and `e` count known neighbours and known non-neighbours, so at all
/// times s <= d(u) <= n_w - e. `cursor` is the next position in the probe
/// order; positions whose white vertex appears in `sampled` were already
/// probed by degree prediction and are skipped. `done` is set exactly when
/// s + e == n_w, at which point s is the exact degree.
struct VertexState {
  VertexId vertex = 0;
  Degree s = 0;
  Degree e = 0;
  std::uint32_t cursor = 0;
  std::vector<VertexId> sampled;  // sorted
  Degree prediction = 0;
  bool done = false;

  Degree upper_bound(VertexId n_white) const noexcept { return n_white - e; }

  friend bool operator==(const VertexState&, const VertexState&) = default;
};

/// One fresh state per black vertex, ids ascending. With n_white == 0 every
/// state starts out done.
std::vector<VertexState> initial_states(VertexId n_black, VertexId n_white);

/// Order in which each black vertex walks W. Identity by default; a seeded
/// permutation applies the same shuffled order to every black vertex.
class ProbeOrder {
 public:
  explicit ProbeOrder(VertexId n_white) : n_white_(n_white) {}
  static ProbeOrder shuffled(VertexId n_white, std::uint64_t seed);

  VertexId size() const noexcept { return n_white_; }
  VertexId at(std::uint32_t position) const noexcept {
    return permutation_.empty() ? position : permutation_[position];
  }
  bool is_identity() const noexcept { return permutation_.empty(); }

 private:
  VertexId n_white_;
  std::vector<VertexId> permutation_;
};

}  // namespace hidden_topk
