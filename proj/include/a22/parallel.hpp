#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace a22 {

using CountVector = std::vector<std::uint64_t>;

/// Worker count used when callers pass 0.
inline int default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `task(i, local)` for i in [0, task_count) on `workers` threads. Each
/// worker accumulates into its own CountVector of length `length`; the
/// results are summed, so the outcome does not depend on scheduling.
template <class Task>
CountVector sum_over_tasks(std::size_t task_count, std::size_t length, int workers, Task task) {
  if (workers <= 0) workers = default_workers();
  workers = static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(task_count, 1)));

  std::vector<CountVector> partial(workers, CountVector(length, 0));
  std::atomic<std::size_t> next{0};
  auto run = [&](int w) {
    for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < task_count;) {
      task(i, partial[w]);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  CountVector total(length, 0);
  for (const auto& p : partial) {
    for (std::size_t n = 0; n < length; ++n) total[n] += p[n];
  }
  return total;
}

}  // namespace a22
