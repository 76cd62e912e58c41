#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

namespace hofa {

using cplx = std::complex<double>;

/// Number of worker threads used by parallel reductions. Resolution order:
/// HOFA_THREADS environment variable, then set_thread_count(), then the
/// hardware default. Always at least 1.
int thread_count();

/// Sets the configured thread count (0 restores the hardware default).
/// HOFA_THREADS, when set, still wins.
void set_thread_count(int n);

namespace detail {

inline constexpr std::int64_t kReduceLeaf = 32;
inline constexpr std::int64_t kReduceChunk = 2048;
inline constexpr std::int64_t kParallelThreshold = 1 << 15;

// Pairwise tree over [lo, hi). The association depends only on the range,
// never on the thread count.
template <typename T, typename F>
T tree_sum_range(std::int64_t lo, std::int64_t hi, const F& term) {
  if (hi - lo <= kReduceLeaf) {
    T acc{};
    for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  return tree_sum_range<T>(lo, mid, term) + tree_sum_range<T>(mid, hi, term);
}

template <typename T>
T combine_chunks(const std::vector<T>& partial, std::int64_t lo, std::int64_t hi) {
  if (hi - lo == 1) return partial[static_cast<std::size_t>(lo)];
  const std::int64_t mid = lo + (hi - lo) / 2;
  return combine_chunks(partial, lo, mid) + combine_chunks(partial, mid, hi);
}

}  // namespace detail

/// Deterministic sum of term(0) + ... + term(n-1) in a fixed pairwise tree
/// order. The range is cut into fixed-size chunks; chunk partial sums may be
/// computed by any number of threads, but chunk boundaries and the combine
/// tree depend only on n, so the result is bit-identical for every thread
/// count.
template <typename T, typename F>
T tree_reduce(std::int64_t n, F&& term) {
  if (n <= 0) return T{};
  if (n <= detail::kReduceChunk) return detail::tree_sum_range<T>(0, n, term);

  const std::int64_t chunks = (n + detail::kReduceChunk - 1) / detail::kReduceChunk;
  std::vector<T> partial(static_cast<std::size_t>(chunks));
  const int workers = (n >= detail::kParallelThreshold) ? thread_count() : 1;

  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t lo = c * detail::kReduceChunk;
      const std::int64_t hi = std::min(n, lo + detail::kReduceChunk);
      partial[static_cast<std::size_t>(c)] = detail::tree_sum_range<T>(lo, hi, term);
    }
  } else {
    std::atomic<std::int64_t> next{0};
    auto work = [&]() {
      for (;;) {
        const std::int64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) return;
        const std::int64_t lo = c * detail::kReduceChunk;
        const std::int64_t hi = std::min(n, lo + detail::kReduceChunk);
        partial[static_cast<std::size_t>(c)] = detail::tree_sum_range<T>(lo, hi, term);
      }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::int64_t>(workers, chunks)) - 1;
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }
  return detail::combine_chunks(partial, 0, chunks);
}

}  // namespace hofa
