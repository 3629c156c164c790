#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace avoidance::detail {

// Runs job(0..count-1) on up to `workers` threads (0 = hardware threads).
// Jobs write to their own slot, so results do not depend on scheduling.
template <typename Job>
void run_indexed(std::size_t count, unsigned workers, Job job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
    });
  }
}

}  // namespace avoidance::detail
