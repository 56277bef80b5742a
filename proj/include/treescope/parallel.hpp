#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace treescope {

/// Worker count: `requested` if positive, else TREESCOPE_THREADS, else 1.
std::size_t resolve_threads(std::size_t requested = 0);

/// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks are
/// claimed dynamically; callers write results by index so the outcome does
/// not depend on scheduling.
template <class Task>
void parallel_for(std::size_t count, std::size_t threads, Task&& task) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::thread> pool;
  const std::size_t spawn = std::min(threads, count) - 1;
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace treescope
