#include "core/worker_pool.hpp"

#include <algorithm>
#include <memory>

namespace ddm {

WorkerPool::WorkerPool(std::size_t threads) {
  const std::size_t extra = threads > 1 ? threads - 1 : 0;
  workers_.reserve(extra);
  for (std::size_t i = 0; i < extra; ++i) {
    workers_.emplace_back([this] { worker_loop(); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : workers_) t.join();
}

void WorkerPool::drain() {
  std::unique_lock lock(mu_);
  while (next_ < tasks_) {
    const std::size_t task = next_++;
    const auto* job = job_;
    lock.unlock();
    try {
      (*job)(task);
    } catch (...) {
      std::lock_guard guard(mu_);
      if (!error_) error_ = std::current_exception();
    }
    lock.lock();
    if (--pending_ == 0) done_.notify_all();
  }
}

void WorkerPool::worker_loop() {
  std::size_t seen = 0;
  for (;;) {
    {
      std::unique_lock lock(mu_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      ++active_;
    }
    drain();
    {
      std::lock_guard lock(mu_);
      if (--active_ == 0) done_.notify_all();
    }
  }
}

void WorkerPool::run(std::size_t tasks,
                     const std::function<void(std::size_t)>& fn) {
  if (tasks == 0) return;
  if (workers_.empty() || tasks == 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  {
    std::lock_guard lock(mu_);
    job_ = &fn;
    tasks_ = tasks;
    next_ = 0;
    pending_ = tasks;
    error_ = nullptr;
    ++generation_;
  }
  wake_.notify_all();
  drain();
  std::unique_lock lock(mu_);
  // Wait for outstanding tasks and for every woken worker to leave drain(),
  // so job_ is never read after this call returns.
  done_.wait(lock, [&] { return pending_ == 0 && active_ == 0; });
  job_ = nullptr;
  tasks_ = 0;
  if (error_) {
    auto err = error_;
    error_ = nullptr;
    std::rethrow_exception(err);
  }
}

std::size_t hardware_threads() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void fork_join(WorkerPool* pool, std::size_t tasks,
               const std::function<void(std::size_t)>& fn) {
  if (pool != nullptr) {
    pool->run(tasks, fn);
    return;
  }
  if (tasks <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  WorkerPool local(std::min(tasks, hardware_threads()));
  local.run(tasks, fn);
}

Block block_range(std::size_t count, std::size_t parts, std::size_t part) {
  const std::size_t base = count / parts;
  const std::size_t extra = count % parts;
  const std::size_t begin = part * base + std::min(part, extra);
  const std::size_t end = begin + base + (part < extra ? 1 : 0);
  return {begin, end};
}

}  // namespace ddm
