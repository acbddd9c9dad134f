#include "hidden_topk/probe_oracle.hpp"

#include <stdexcept>
#include <string>
#include <thread>

#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

ProbeOracle::ProbeOracle(const BipartiteGraph& graph, std::chrono::microseconds delay)
    : graph_(&graph), delay_(delay) {
  if (delay.count() < 0) throw std::invalid_argument("probe delay must be non-negative");
}

bool ProbeOracle::probe(VertexId b, VertexId w) {
  if (b >= graph_->n_black() || w >= graph_->n_white()) {
    throw IdRangeError("probe(" + std::to_string(b) + ", " + std::to_string(w) +
                       ") outside " + std::to_string(graph_->n_black()) + "x" +
                       std::to_string(graph_->n_white()));
  }
  const bool answer = graph_->has_edge_unchecked(b, w);

  if (seen_) {
    const std::uint64_t pair = static_cast<std::uint64_t>(b) * graph_->n_white() + w;
    const std::uint64_t mask = std::uint64_t{1} << (pair % 64);
    const std::uint64_t before = seen_[pair / 64].fetch_or(mask, std::memory_order_relaxed);
    audit_invocations_.fetch_add(1, std::memory_order_relaxed);
    if ((before & mask) != 0) repeated_.fetch_add(1, std::memory_order_relaxed);
  }
  if (tracing_.load(std::memory_order_relaxed)) {
    std::lock_guard lock(trace_mutex_);
    trace_.push_back({b, w, answer});
  }
  if (delay_.count() > 0) std::this_thread::sleep_for(delay_);

  probes_.fetch_add(1, std::memory_order_acq_rel);
  return answer;
}

void ProbeOracle::enable_audit(std::uint64_t max_pairs) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(graph_->n_black()) * graph_->n_white();
  if (pairs > max_pairs) {
    throw std::length_error("audit bitmap for " + std::to_string(pairs) +
                            " pairs exceeds the configured limit");
  }
  const std::uint64_t words = pairs / 64 + 1;
  seen_ = std::make_unique<std::atomic<std::uint64_t>[]>(words);
  for (std::uint64_t i = 0; i < words; ++i) seen_[i].store(0, std::memory_order_relaxed);
}

AuditReport ProbeOracle::audit_report() const {
  return {audit_invocations_.load(), repeated_.load(), sandwich_violations_.load(),
          unsafe_prunes_.load()};
}

void ProbeOracle::enable_trace() {
  std::lock_guard lock(trace_mutex_);
  tracing_ = true;
}

std::vector<ProbeEvent> ProbeOracle::trace() const {
  std::lock_guard lock(trace_mutex_);
  return trace_;
}

void ProbeOracle::audit_state(const VertexState& state) {
  if (!seen_) return;
  const Degree d = graph_->degree(state.vertex);
  const Degree n_w = graph_->n_white();
  const bool bad = state.s > d || state.e > n_w || d > n_w - state.e ||
                   state.done != (state.s + state.e == n_w);
  if (bad) sandwich_violations_.fetch_add(1, std::memory_order_relaxed);
}

void ProbeOracle::audit_pruned(VertexId b, Degree threshold) {
  if (!seen_) return;
  if (graph_->degree(b) >= threshold) unsafe_prunes_.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace hidden_topk
