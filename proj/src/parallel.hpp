#ifndef HMAP_PARALLEL_HPP
#define HMAP_PARALLEL_HPP

#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace hmap {

// Worker count for grid scans. Per-chunk work is pure and the combine step
// is order-independent, so results are identical for every job count.
inline std::atomic<unsigned>& jobs_setting() {
  static std::atomic<unsigned> jobs{1};
  return jobs;
}

inline void set_jobs(unsigned n) {
  jobs_setting().store(n == 0 ? std::thread::hardware_concurrency() : n);
}

inline unsigned effective_jobs() {
  const unsigned n = jobs_setting().load();
  return n == 0 ? 1 : n;
}

// Maps chunk_fn over contiguous index chunks of [0, count) and folds the
// per-chunk results in chunk order with combine. chunk_fn: (begin, end) -> T.
template <class T, class ChunkFn, class Combine>
T chunked_reduce(std::size_t count, ChunkFn chunk_fn, Combine combine,
                 T init) {
  const unsigned jobs = effective_jobs();
  if (jobs <= 1 || count < 2048) {
    if (count == 0) return init;
    return combine(init, chunk_fn(std::size_t{0}, count));
  }
  const std::size_t nchunks = std::min<std::size_t>(jobs, count);
  std::vector<std::future<T>> futures;
  futures.reserve(nchunks);
  for (std::size_t c = 0; c < nchunks; ++c) {
    const std::size_t lo = count * c / nchunks;
    const std::size_t hi = count * (c + 1) / nchunks;
    futures.push_back(std::async(std::launch::async, chunk_fn, lo, hi));
  }
  T acc = init;
  for (auto& f : futures) acc = combine(acc, f.get());
  return acc;
}

}  // namespace hmap

#endif
