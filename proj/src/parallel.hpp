#pragma once

#include <cstddef>
#include <functional>

namespace frobcx {

/// Worker count for per-grade sweeps: hardware concurrency, capped by the
/// FROBCX_THREADS environment variable when set.
std::size_t worker_count();

/// Runs task(i) for i in [0, n). Tasks must be independent; each writes its
/// own slot, so the merged result is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace frobcx
