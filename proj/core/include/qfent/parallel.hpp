#pragma once

// Tiny index-range parallel_for. Thread count comes from QFENT_THREADS if set,
// otherwise hardware_concurrency(). Work items must be independent.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qfent {

inline unsigned thread_count() {
  if (const char* env = std::getenv("QFENT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 512) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

template <typename F>
void parallel_for(long begin, long end, F&& body) {
  const long n = end - begin;
  if (n <= 0) return;
  const unsigned workers = std::min<long>(thread_count(), n);
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const long lo = begin + w * chunk;
    const long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qfent
