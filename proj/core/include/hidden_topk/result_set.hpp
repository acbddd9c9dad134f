#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hidden_topk/graph.hpp"

namespace hidden_topk {

struct RankedVertex {
  VertexId vertex;
  Degree degree;

  friend bool operator==(const RankedVertex&, const RankedVertex&) = default;
};

/// The answer R of a top-k degree query.
///
/// Entries are sorted by degree descending, then vertex id ascending. The set
/// is tie-closed: with d* the degree at rank k, every vertex of degree >= d*
/// is listed, so R may hold more than k entries. When fewer than k black
/// vertices exist, all of them are returned and `k_exceeds_population` is set.
class ResultSet {
 public:
  ResultSet() = default;

  /// Tie-closed top-k of a candidate pool whose degrees are all exact.
  /// `population` is n_b, used only to flag k > n_b.
  static ResultSet top_k_of(std::vector<RankedVertex> candidates, std::size_t k,
                            std::size_t population);

  const std::vector<RankedVertex>& entries() const noexcept { return entries_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool k_exceeds_population() const noexcept { return k_exceeds_population_; }

  /// Degree at rank k (or the smallest listed degree when fewer entries).
  Degree threshold_degree() const noexcept;
  Degree top_degree() const noexcept { return entries_.empty() ? 0 : entries_.front().degree; }

  /// Internal consistency: ordering, no duplicate vertices, size >= k unless
  /// flagged, and every entry past rank k ties with rank k. Returns an empty
  /// string when valid, otherwise a description of the first problem.
  std::string validate() const;

  friend bool operator==(const ResultSet&, const ResultSet&) = default;

 private:
  std::vector<RankedVertex> entries_;
  std::size_t k_ = 0;
  bool k_exceeds_population_ = false;
};

/// Sort order used by ResultSet: degree descending, vertex ascending.
bool ranks_before(const RankedVertex& a, const RankedVertex& b) noexcept;

std::string to_string(const ResultSet& result);

}  // namespace hidden_topk
