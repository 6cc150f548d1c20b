#ifndef PARWREATH_SRC_PARALLEL_HPP_
#define PARWREATH_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace parwreath::detail {

// Static range split; body(lo, hi) runs on [lo, hi).
inline void parallel_for(uint64_t begin, uint64_t end, uint32_t threads,
                         const std::function<void(uint64_t, uint64_t)>& body) {
  const uint64_t total = end > begin ? end - begin : 0;
  if (total == 0) {
    return;
  }
  if (threads <= 1 || total < 4096) {
    body(begin, end);
    return;
  }
  const uint64_t per_thread = (total + threads - 1) / threads;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (uint32_t t = 0; t < threads; ++t) {
    const uint64_t lo = begin + t * per_thread;
    const uint64_t hi = std::min(end, lo + per_thread);
    if (lo >= hi) {
      break;
    }
    workers.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (std::thread& w : workers) {
    w.join();
  }
}

// Worker pool over chunk indices fetched from an atomic counter; each
// worker calls body(worker_id, chunk_index) until the supply runs dry or
// body returns false (stop fetching in that worker).
inline void parallel_chunks(uint64_t num_chunks, uint32_t threads,
                            const std::function<bool(uint32_t, uint64_t)>& body) {
  if (num_chunks == 0) {
    return;
  }
  std::atomic<uint64_t> next{0};
  const auto worker = [&](uint32_t id) {
    while (true) {
      const uint64_t chunk = next.fetch_add(1);
      if (chunk >= num_chunks || !body(id, chunk)) {
        return;
      }
    }
  };
  if (threads <= 1 || num_chunks == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (uint32_t t = 0; t < threads; ++t) {
    workers.emplace_back(worker, t);
  }
  for (std::thread& w : workers) {
    w.join();
  }
}

}  // namespace parwreath::detail

#endif  // PARWREATH_SRC_PARALLEL_HPP_
