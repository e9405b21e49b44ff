#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ddm {

// Fork-join pool. run(tasks, fn) invokes fn(0..tasks-1) across the pool's
// threads plus the calling thread and returns once every task has finished,
// so each call is one barrier. The number of logical tasks is independent of
// the thread count; a pool with one thread runs every task inline in order.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t threads = 1);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t threads() const noexcept { return workers_.size() + 1; }

  // Exceptions thrown by a task are rethrown here (the first one wins).
  void run(std::size_t tasks, const std::function<void(std::size_t)>& fn);

 private:
  void worker_loop();
  void drain();

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t tasks_ = 0;
  std::size_t next_ = 0;
  std::size_t pending_ = 0;
  std::size_t active_ = 0;
  std::size_t generation_ = 0;
  std::exception_ptr error_;
  bool stop_ = false;
};

// Runs fn over `tasks` using `pool` when given, otherwise on a temporary pool
// sized to min(tasks, hardware threads), or inline for a single task.
void fork_join(WorkerPool* pool, std::size_t tasks,
               const std::function<void(std::size_t)>& fn);

// Contiguous block [begin, end) of `count` items for part `part` of `parts`;
// leading parts take the remainder.
struct Block {
  std::size_t begin;
  std::size_t end;
};
Block block_range(std::size_t count, std::size_t parts, std::size_t part);

std::size_t hardware_threads();

}  // namespace ddm
