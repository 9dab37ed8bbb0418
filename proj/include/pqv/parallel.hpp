#pragma once

#include <cstddef>
#include <functional>

namespace pqv {

/// Worker count: PQ_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Runs body(chunk) for chunk = 0..chunks-1 on up to worker_count() threads.
/// Chunks are handed out dynamically; callers combine per-chunk results in
/// chunk order to stay deterministic.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

}  // namespace pqv
