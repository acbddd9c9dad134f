#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace hidden_topk::detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Sorted uniform sample of `count` distinct values from [0, n).
/// Floyd's algorithm when the sample is sparse, selection sampling otherwise.
template <typename Rng>
std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t count, Rng& rng) {
  std::vector<std::uint32_t> out;
  if (count >= n) {
    out.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  out.reserve(count);
  if (static_cast<std::uint64_t>(count) * 4 < n) {
    std::unordered_set<std::uint32_t> chosen;
    chosen.reserve(count * 2);
    for (std::uint32_t j = n - count; j < n; ++j) {
      const std::uint32_t t = std::uniform_int_distribution<std::uint32_t>(0, j)(rng);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    out.assign(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  // Knuth's algorithm S.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint32_t needed = count;
  for (std::uint32_t i = 0; i < n && needed > 0; ++i) {
    const std::uint32_t remaining = n - i;
    if (unit(rng) * remaining < needed) {
      out.push_back(i);
      --needed;
    }
  }
  return out;
}

}  // namespace hidden_topk::detail
