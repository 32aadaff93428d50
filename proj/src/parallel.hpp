#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace windmill {

// Worker cap from WINDMILL_THREADS (0 or 1 means sequential, unset means
// hardware concurrency capped at 8).
int max_workers();

// Evaluates fn(begin, end) over fixed chunks of [0, n) and returns the per-chunk
// results in chunk order. Chunk boundaries depend only on n, never on the worker
// count, so merged output is bit-identical to a sequential run.
template <class R, class Fn>
std::vector<R> map_chunks(std::size_t n, Fn&& fn) {
  const std::size_t chunk_count = n < 64 ? (n > 0 ? 1 : 0) : 64;
  std::vector<R> results(chunk_count);
  if (chunk_count == 0) return results;
  const std::size_t chunk_size = (n + chunk_count - 1) / chunk_count;

  int workers = max_workers();
  if (workers <= 1 || chunk_count == 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) {
      std::size_t b = c * chunk_size;
      std::size_t e = b + chunk_size < n ? b + chunk_size : n;
      results[c] = fn(b, e);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunk_count || failed.load()) return;
      std::size_t b = c * chunk_size;
      std::size_t e = b + chunk_size < n ? b + chunk_size : n;
      try {
        results[c] = fn(b, e);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int nthreads = workers < static_cast<int>(chunk_count) ? workers : static_cast<int>(chunk_count);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace windmill
