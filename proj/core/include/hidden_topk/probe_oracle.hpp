#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <vector>

#include "hidden_topk/graph.hpp"

namespace hidden_topk {

struct VertexState;

struct ProbeEvent {
  VertexId black;
  VertexId white;
  bool answer;
};

/// Counters collected while auditing is enabled. All zero otherwise.
struct AuditReport {
  ProbeCount invocations = 0;          // probe() calls seen by the audit wrapper
  ProbeCount repeated_pairs = 0;       // calls on a pair that was already probed
  ProbeCount sandwich_violations = 0;  // states with s > d(u) or d(u) > n_w - e
  ProbeCount unsafe_prunes = 0;        // vertices pruned below T with d(u) >= T
};

/// The hidden graph as the algorithms see it: f(b, w) plus a probe counter.
///
/// probe() may be called concurrently. The counter is exact. An optional
/// sleep per probe models an expensive edge test. Audit mode keeps one bit
/// per (b, w) pair to catch repeated probes and enables the ground-truth
/// checks below; it costs n_b * n_w / 8 bytes and is off by default.
class ProbeOracle {
 public:
  explicit ProbeOracle(const BipartiteGraph& graph,
                       std::chrono::microseconds delay = std::chrono::microseconds{0});
  ProbeOracle(const ProbeOracle&) = delete;
  ProbeOracle& operator=(const ProbeOracle&) = delete;

  bool probe(VertexId b, VertexId w);

  ProbeCount probes() const noexcept { return probes_.load(std::memory_order_acquire); }
  VertexId n_black() const noexcept { return graph_->n_black(); }
  VertexId n_white() const noexcept { return graph_->n_white(); }
  std::chrono::microseconds delay() const noexcept { return delay_; }

  /// Throws std::length_error when the pair bitmap would exceed `max_pairs`.
  void enable_audit(std::uint64_t max_pairs = std::uint64_t{1} << 34);
  bool auditing() const noexcept { return static_cast<bool>(seen_); }
  AuditReport audit_report() const;

  /// Records every probe in issue order. Intended for single-threaded runs.
  void enable_trace();
  std::vector<ProbeEvent> trace() const;

  /// Checks s(u) <= d(u) <= n_w - e(u) against the ground truth. No-op unless
  /// auditing; never changes answers or the probe counter.
  void audit_state(const VertexState& state);
  /// Checks that a vertex discarded under threshold `threshold` really has a
  /// smaller degree. No-op unless auditing.
  void audit_pruned(VertexId b, Degree threshold);

 private:
  const BipartiteGraph* graph_;
  std::chrono::microseconds delay_;
  std::atomic<ProbeCount> probes_{0};

  std::unique_ptr<std::atomic<std::uint64_t>[]> seen_;
  std::atomic<ProbeCount> audit_invocations_{0};
  std::atomic<ProbeCount> repeated_{0};
  std::atomic<ProbeCount> sandwich_violations_{0};
  std::atomic<ProbeCount> unsafe_prunes_{0};

  std::atomic<bool> tracing_{false};
  mutable std::mutex trace_mutex_;
  std::vector<ProbeEvent> trace_;
};

}  // namespace hidden_topk
