#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>

namespace proofloom::util {

// Counting semaphore with a runtime slot count.
class Semaphore {
 public:
  explicit Semaphore(int slots) : slots_(slots < 1 ? 1 : slots) {}

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
  }

  void release() {
    {
      std::lock_guard lock(mutex_);
      ++slots_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int slots_;
};

struct SemaphoreGuard {
  explicit SemaphoreGuard(Semaphore& s) : sem(s) { sem.acquire(); }
  ~SemaphoreGuard() { sem.release(); }
  SemaphoreGuard(const SemaphoreGuard&) = delete;
  SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;
  Semaphore& sem;
};

// Runs fn(0..n-1) on up to `workers` threads. Results must be written to
// index-addressed slots by the caller so scheduling never affects output.
// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace proofloom::util
