#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace majassign {

/// Logical cores, at least 1.
inline int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Splits [begin, end) into `jobs` contiguous ranges and runs
/// body(worker, lo, hi) for each, one thread per range. The first exception
/// thrown by a worker is rethrown after all workers finish.
template <class Body>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, int jobs, Body&& body) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  const std::uint64_t used = std::min<std::uint64_t>(workers, total);
  if (used == 1) {
    body(0, begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(used);
  std::vector<std::thread> threads;
  threads.reserve(used);
  for (std::uint64_t w = 0; w < used; ++w) {
    const std::uint64_t lo = begin + total * w / used;
    const std::uint64_t hi = begin + total * (w + 1) / used;
    threads.emplace_back([&, w, lo, hi] {
      try {
        body(static_cast<int>(w), lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace majassign
