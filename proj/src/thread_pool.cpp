#include "subgrad/thread_pool.hpp"

namespace subgrad {

ThreadPool::ThreadPool(unsigned width) {
  const unsigned helpers = width > 1 ? width - 1 : 0;
  helpers_.reserve(helpers);
  for (unsigned i = 0; i < helpers; ++i) {
    helpers_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stopping_.store(true, std::memory_order_relaxed);
  }
  work_ready_.notify_all();
  for (std::thread& t : helpers_) t.join();
}

void ThreadPool::run_shard(Job& job) {
  for (;;) {
    const std::size_t index = job.next.fetch_add(1, std::memory_order_relaxed);
    if (index >= job.count) break;
    try {
      (*job.body)(index);
    } catch (...) {
      std::lock_guard<std::mutex> lock(job.error_mutex);
      if (!job.error) job.error = std::current_exception();
    }
    if (job.completed.fetch_add(1, std::memory_order_acq_rel) + 1 == job.count) {
      std::lock_guard<std::mutex> lock(mutex_);
      job_done_.notify_all();
    }
  }
}

void ThreadPool::worker_loop() {
  std::uint64_t seen = 0;
  for (;;) {
    // Spin briefly before sleeping: the per-iteration map phases are short
    // and a condition-variable wakeup can cost more than one whole phase.
    for (int spin = 0; spin < 16384; ++spin) {
      if (generation_.load(std::memory_order_acquire) != seen ||
          stopping_.load(std::memory_order_relaxed)) {
        break;
      }
    }
    std::shared_ptr<Job> job;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      work_ready_.wait(lock, [&] {
        return stopping_.load(std::memory_order_relaxed) ||
               generation_.load(std::memory_order_relaxed) != seen;
      });
      if (stopping_.load(std::memory_order_relaxed)) return;
      seen = generation_.load(std::memory_order_relaxed);
      job = job_;
    }
    if (job) run_shard(*job);
  }
}

void ThreadPool::for_each_index(std::size_t count,
                                const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  if (helpers_.empty() || count == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  auto job = std::make_shared<Job>();
  job->body = &body;
  job->count = count;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    job_ = job;
    generation_.fetch_add(1, std::memory_order_release);
  }
  work_ready_.notify_all();

  run_shard(*job);

  {
    std::unique_lock<std::mutex> lock(mutex_);
    job_done_.wait(lock, [&] {
      return job->completed.load(std::memory_order_acquire) == count;
    });
    job_.reset();
  }
  if (job->error) std::rethrow_exception(job->error);
}

}  // namespace subgrad
