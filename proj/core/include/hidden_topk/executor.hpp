#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hidden_topk/probe_oracle.hpp"
#include "hidden_topk/vertex_state.hpp"

namespace hidden_topk {

enum class Scheduling {
  kStatic,   // contiguous equal ranges, one per worker
  kDynamic,  // workers pull fixed-size chunks from a shared cursor
};

/// Per-round observability record.
struct RoundStats {
  std::uint32_t round = 0;
  std::string phase;
  ProbeCount probes = 0;
  std::uint32_t completed = 0;
  std::uint64_t budget = 0;  // failure budget handed to the round, 0 if none
  Degree threshold = 0;      // pruning threshold of an exhaust round
  std::chrono::nanoseconds wall{0};
};

/// A body threw while processing a vertex. The round was still drained to the
/// barrier before this was raised.
class RoundAborted : public std::runtime_error {
 public:
  RoundAborted(VertexId vertex, const std::string& what)
      : std::runtime_error("vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

/// Barrier-synchronized map over vertex states.
///
/// Workers are spawned once and reused for every round. During a round each
/// state is handed to exactly one worker; parallel_map returns only after
/// every body has returned. Bodies may touch only their own state and the
/// (thread-safe) oracle, so results do not depend on worker count or
/// scheduling.
class Executor {
 public:
  explicit Executor(unsigned workers = 1, Scheduling scheduling = Scheduling::kStatic,
                    std::size_t chunk = 64);
  ~Executor();
  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  unsigned workers() const noexcept { return workers_; }
  Scheduling scheduling() const noexcept { return scheduling_; }

  using Body = std::function<void(VertexState&)>;

  /// Applies `body` once to every state. The probe delta is read from
  /// `counter` around the barrier, so it is exact as long as no other thread
  /// probes concurrently.
  RoundStats parallel_map(std::span<VertexState> states, const ProbeOracle& counter,
                          const Body& body);

 private:
  void worker_loop(unsigned index);
  void run_range(std::span<VertexState> states, std::size_t begin, std::size_t end);

  unsigned workers_;
  Scheduling scheduling_;
  std::size_t chunk_;

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  std::uint64_t generation_ = 0;
  unsigned pending_ = 0;
  bool stopping_ = false;

  // Per-round job, written by the coordinator before releasing workers.
  std::span<VertexState> job_states_;
  const Body* job_body_ = nullptr;
  std::atomic<std::size_t> next_chunk_{0};

  std::mutex error_mutex_;
  bool failed_ = false;
  VertexId failed_vertex_ = 0;
  std::string failure_;
};

}  // namespace hidden_topk
