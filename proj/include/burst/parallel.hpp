#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace burst {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Calls body(i) for every i in [0, count) on up to `jobs` threads. Work is
// handed out in fixed chunks; callers write results by index, so the
// outcome does not depend on the thread count. The first exception thrown
// (lowest index wins) is rethrown after all threads finish.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  if (jobs == 0) jobs = default_jobs();
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::exception_ptr error;
  std::size_t error_at = count;
  auto worker = [&] {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(guard);
          if (i < error_at) {
            error_at = i;
            error = std::current_exception();
          }
        }
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(jobs, (count + kChunk - 1) / kChunk));
  for (unsigned j = 0; j < spawn; ++j) threads.emplace_back(worker);
  for (std::thread& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace burst
