#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace detpart {

/// Fixed-size worker pool with dynamically scheduled parallel loops.
///
/// Chunks are claimed from a shared counter, so which thread runs which chunk
/// varies between runs. Every algorithm in this library is written so that
/// its result does not depend on that assignment: loop bodies write only to
/// cells they own, or combine with commutative integer operations.
///
/// A loop issued from inside a running loop body executes inline.
class Executor {
 public:
  static constexpr std::size_t kDefaultGrain = 2048;

  /// `num_threads` = 0 selects std::thread::hardware_concurrency().
  /// Loops over at most `grain` items run on the calling thread.
  explicit Executor(unsigned num_threads = 0, std::size_t grain = kDefaultGrain);
  ~Executor();

  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  unsigned num_threads() const noexcept { return static_cast<unsigned>(workers_.size()) + 1; }
  std::size_t grain() const noexcept { return grain_; }

  /// Shared single-threaded executor.
  static Executor& serial();

  /// Calls body(begin, end) on disjoint chunks that together cover [0, n).
  template <typename Body>
  void for_range(std::size_t n, Body&& body) {
    if (n == 0) return;
    if (workers_.empty() || n <= grain_ || in_region_) {
      body(std::size_t{0}, n);
      return;
    }
    std::atomic<std::size_t> next{0};
    const std::size_t chunk = grain_;
    run([&] {
      for (;;) {
        const std::size_t b = next.fetch_add(chunk, std::memory_order_relaxed);
        if (b >= n) break;
        body(b, std::min(n, b + chunk));
      }
    });
  }

  /// Calls body(i) for every i in [0, n).
  template <typename Body>
  void for_each(std::size_t n, Body&& body) {
    for_range(n, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) body(i);
    });
  }

  /// Sorts under `less`, which must be a strict total order on the values
  /// present; the result is then unique and independent of scheduling.
  template <typename T, typename Less>
  void sort(std::vector<T>& v, Less less) {
    const std::size_t n = v.size();
    const std::size_t parts = num_threads();
    if (parts == 1 || n <= grain_ || in_region_) {
      std::sort(v.begin(), v.end(), less);
      return;
    }
    std::vector<std::size_t> bounds(parts + 1);
    for (std::size_t i = 0; i <= parts; ++i) bounds[i] = n * i / parts;
    tasks(parts, [&](std::size_t i) {
      std::sort(v.begin() + bounds[i], v.begin() + bounds[i + 1], less);
    });
    std::vector<T> buffer(n);
    for (std::size_t width = 1; width < parts; width *= 2) {
      const std::size_t pairs = (parts + 2 * width - 1) / (2 * width);
      tasks(pairs, [&](std::size_t p) {
        const std::size_t lo = bounds[2 * p * width];
        const std::size_t mid = bounds[std::min(parts, (2 * p + 1) * width)];
        const std::size_t hi = bounds[std::min(parts, (2 * p + 2) * width)];
        std::merge(v.begin() + lo, v.begin() + mid, v.begin() + mid, v.begin() + hi,
                   buffer.begin() + lo, less);
      });
      v.swap(buffer);
    }
  }

 private:
  /// Runs body(i) for i in [0, count), one index per claim, ignoring grain.
  template <typename Body>
  void tasks(std::size_t count, Body&& body) {
    std::atomic<std::size_t> next{0};
    run([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        body(i);
      }
    });
  }

  /// Executes `task` once on every pool thread and on the caller.
  void run(const std::function<void()>& task);
  void worker_loop();

  std::vector<std::thread> workers_;
  std::size_t grain_;

  std::mutex run_mutex_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void()>* task_ = nullptr;
  std::size_t generation_ = 0;
  std::size_t pending_ = 0;
  bool stopping_ = false;
  std::exception_ptr error_;

  static thread_local bool in_region_;
};

}  // namespace detpart
