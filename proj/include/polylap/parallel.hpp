#pragma once

#include <functional>

namespace polylap {

/// Worker-pool width: POLYLAP_THREADS when set (clamped to >= 1), otherwise
/// the hardware concurrency.
int worker_count();

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on a pool of
/// worker_count() threads. fn must only write to per-index slots, which keeps
/// results identical to the serial order.
void parallel_chunks(int n, const std::function<void(int, int)>& fn);

/// Per-index flavour of parallel_chunks.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace polylap
