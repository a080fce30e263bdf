// parallel.hpp — deterministic worker splitting for exhaustive scans.
// Work is partitioned into contiguous index ranges; merges are pointwise
// sums or ordered concatenations, so any worker count produces identical
// results.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace qcl {

// requested <= 0 falls back to the QCL_WORKERS environment variable, then 1
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCL_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

inline std::pair<std::uint64_t, std::uint64_t> chunk(std::uint64_t total, int workers, int w) {
  std::uint64_t lo = total * std::uint64_t(w) / workers;
  std::uint64_t hi = total * std::uint64_t(w + 1) / workers;
  return {lo, hi};
}

template <class Fn>
void run_workers(int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errs(workers);
  for (int w = 1; w < workers; ++w)
    threads.emplace_back([&fn, &errs, w] {
      try {
        fn(w);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  try {
    fn(0);
  } catch (...) {
    errs[0] = std::current_exception();
  }
  for (auto& t : threads) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace qcl
