// Deterministic chunked parallelism: work is split into contiguous chunks,
// each chunk produces an exact partial result, and partials are reduced in
// chunk order by the caller. Output never depends on the worker count.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace spm {

// jobs = 0 resolves to the SPM_JOBS environment variable if set, otherwise
// to std::thread::hardware_concurrency().
unsigned resolve_jobs(unsigned jobs);

// Runs fn(chunk_index, begin, end) over [0, count) split into chunk_count
// contiguous chunks. Chunk boundaries depend only on count and chunk_count,
// never on jobs, so per-chunk results are stable across worker counts.
// fn must only write state owned by its chunk index.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, std::size_t chunk_count,
                     Fn&& fn) {
  if (count == 0 || chunk_count == 0) return;
  const std::size_t chunk_size = (count + chunk_count - 1) / chunk_count;
  std::atomic<std::size_t> cursor{0};
  auto body = [&] {
    for (;;) {
      const std::size_t c = cursor.fetch_add(1);
      if (c >= chunk_count) return;
      const std::size_t begin = c * chunk_size;
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + chunk_size);
      fn(c, begin, end);
    }
  };
  const unsigned worker_count = resolve_jobs(jobs);
  if (worker_count <= 1 || chunk_count == 1) {
    body();
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (unsigned w = 0; w < worker_count; ++w) workers.emplace_back(body);
  for (auto& t : workers) t.join();
}

}  // namespace spm
