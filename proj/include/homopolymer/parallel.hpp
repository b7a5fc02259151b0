#ifndef HOMOPOLYMER_PARALLEL_HPP
#define HOMOPOLYMER_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace homopoly {

// Global cap on worker threads, settable once from the CLI (--threads).
// 0 means "use hardware parallelism".
inline unsigned& thread_cap() {
  static unsigned cap = 0;
  return cap;
}

inline unsigned effective_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned cap = thread_cap();
  return cap == 0 ? hw : std::min(cap, hw);
}

// Static block partition of [0, n) over worker threads.  Each index is
// processed by exactly one thread, so results written to disjoint slots are
// identical for every thread count.  Reductions over the slots must be done
// by the caller in index order.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
  if (n <= 0) return;
  unsigned nthreads = effective_threads();
  if (nthreads <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  nthreads = static_cast<unsigned>(
      std::min<std::int64_t>(nthreads, n));
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  const std::int64_t chunk = (n + nthreads - 1) / nthreads;
  for (unsigned w = 0; w < nthreads; ++w) {
    const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

} // namespace homopoly

#endif
