#include "hidden_topk/result_set.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hidden_topk {

bool ranks_before(const RankedVertex& a, const RankedVertex& b) noexcept {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.vertex < b.vertex;
}

ResultSet ResultSet::top_k_of(std::vector<RankedVertex> candidates, std::size_t k,
                              std::size_t population) {
  ResultSet r;
  r.k_ = k;
  r.k_exceeds_population_ = k > population;
  std::sort(candidates.begin(), candidates.end(), ranks_before);
  if (k > 0 && candidates.size() > k) {
    const Degree cutoff = candidates[k - 1].degree;
    auto end = std::partition_point(candidates.begin(), candidates.end(),
                                    [cutoff](const RankedVertex& v) { return v.degree >= cutoff; });
    candidates.erase(end, candidates.end());
  } else if (k == 0) {
    candidates.clear();
  }
  r.entries_ = std::move(candidates);
  return r;
}

Degree ResultSet::threshold_degree() const noexcept {
  if (entries_.empty()) return 0;
  if (k_ == 0 || entries_.size() < k_) return entries_.back().degree;
  return entries_[k_ - 1].degree;
}

std::string ResultSet::validate() const {
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!seen.insert(entries_[i].vertex).second) {
      return "vertex " + std::to_string(entries_[i].vertex) + " listed twice";
    }
    if (i > 0 && !ranks_before(entries_[i - 1], entries_[i])) {
      return "entries out of order at position " + std::to_string(i);
    }
  }
  if (entries_.size() < k_ && !k_exceeds_population_) {
    return "only " + std::to_string(entries_.size()) + " entries for k=" + std::to_string(k_);
  }
  if (k_ > 0 && entries_.size() > k_) {
    const Degree cutoff = entries_[k_ - 1].degree;
    if (entries_.back().degree != cutoff) {
      return "entry past rank k has degree " + std::to_string(entries_.back().degree) +
             " below the rank-k degree " + std::to_string(cutoff);
    }
  }
  return {};
}

std::string to_string(const ResultSet& result) {
  std::ostringstream os;
  os << "k=" << result.k() << " {";
  for (std::size_t i = 0; i < result.entries().size(); ++i) {
    if (i) os << ", ";
    os << "(b" << result.entries()[i].vertex << ", " << result.entries()[i].degree << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace hidden_topk
