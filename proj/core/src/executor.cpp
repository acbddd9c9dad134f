#include "hidden_topk/executor.hpp"

#include <algorithm>

namespace hidden_topk {

Executor::Executor(unsigned workers, Scheduling scheduling, std::size_t chunk)
    : workers_(workers), scheduling_(scheduling), chunk_(std::max<std::size_t>(chunk, 1)) {
  if (workers == 0) throw std::invalid_argument("executor needs at least one worker");
  // A single worker runs inline on the coordinating thread.
  if (workers_ > 1) {
    threads_.reserve(workers_);
    for (unsigned i = 0; i < workers_; ++i) threads_.emplace_back([this, i] { worker_loop(i); });
  }
}

Executor::~Executor() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  start_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void Executor::run_range(std::span<VertexState> states, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    try {
      (*job_body_)(states[i]);
    } catch (const std::exception& ex) {
      std::lock_guard lock(error_mutex_);
      // Keep the lowest failing vertex so the diagnostic is reproducible.
      if (!failed_ || states[i].vertex < failed_vertex_) {
        failed_ = true;
        failed_vertex_ = states[i].vertex;
        failure_ = ex.what();
      }
    }
  }
}

void Executor::worker_loop(unsigned index) {
  std::uint64_t seen_generation = 0;
  for (;;) {
    {
      std::unique_lock lock(mutex_);
      start_cv_.wait(lock, [&] { return stopping_ || generation_ != seen_generation; });
      if (stopping_) return;
      seen_generation = generation_;
    }

    const std::size_t n = job_states_.size();
    if (scheduling_ == Scheduling::kStatic) {
      const std::size_t begin = n * index / workers_;
      const std::size_t end = n * (index + 1) / workers_;
      run_range(job_states_, begin, end);
    } else {
      for (;;) {
        const std::size_t begin = next_chunk_.fetch_add(chunk_, std::memory_order_relaxed);
        if (begin >= n) break;
        run_range(job_states_, begin, std::min(n, begin + chunk_));
      }
    }

    {
      std::lock_guard lock(mutex_);
      if (--pending_ == 0) done_cv_.notify_one();
    }
  }
}

RoundStats Executor::parallel_map(std::span<VertexState> states, const ProbeOracle& counter,
                                  const Body& body) {
  RoundStats stats;
  const auto started = std::chrono::steady_clock::now();
  const ProbeCount probes_before = counter.probes();
  std::size_t done_before = 0;
  for (const auto& s : states) done_before += s.done ? 1 : 0;

  failed_ = false;
  job_body_ = &body;
  job_states_ = states;

  if (!states.empty()) {
    if (threads_.empty()) {
      run_range(states, 0, states.size());
    } else {
      {
        std::lock_guard lock(mutex_);
        next_chunk_.store(0, std::memory_order_relaxed);
        pending_ = workers_;
        ++generation_;
      }
      start_cv_.notify_all();
      std::unique_lock lock(mutex_);
      done_cv_.wait(lock, [&] { return pending_ == 0; });
    }
  }
  job_body_ = nullptr;

  if (failed_) throw RoundAborted(failed_vertex_, failure_);

  std::size_t done_after = 0;
  for (const auto& s : states) done_after += s.done ? 1 : 0;
  stats.probes = counter.probes() - probes_before;
  stats.completed = static_cast<std::uint32_t>(done_after - done_before);
  stats.wall = std::chrono::steady_clock::now() - started;
  return stats;
}

}  // namespace hidden_topk
