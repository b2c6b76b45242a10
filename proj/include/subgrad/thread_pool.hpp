// Minimal persistent worker pool for the per-iteration parallel map.
// Indices are claimed dynamically, so the thread-to-index assignment is
// arbitrary; callers must make the result independent of that assignment
// (disjoint output slots, reductions done by the caller in a fixed order).

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace subgrad {

class ThreadPool {
 public:
  // `width` is the total parallelism including the calling thread;
  // width <= 1 runs everything inline.
  explicit ThreadPool(unsigned width);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned width() const { return static_cast<unsigned>(helpers_.size()) + 1; }

  // Runs body(0) ... body(count-1), returning after all calls finished.
  // The first exception thrown by a body is rethrown here.
  void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

  static unsigned hardware_width() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
  }

 private:
  struct Job {
    const std::function<void(std::size_t)>* body = nullptr;
    std::size_t count = 0;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> completed{0};
    std::exception_ptr error;
    std::mutex error_mutex;
  };

  void worker_loop();
  void run_shard(Job& job);

  std::vector<std::thread> helpers_;
  std::mutex mutex_;
  std::condition_variable work_ready_;
  std::condition_variable job_done_;
  std::shared_ptr<Job> job_;
  std::atomic<std::uint64_t> generation_{0};
  std::atomic<bool> stopping_{false};
};

}  // namespace subgrad
