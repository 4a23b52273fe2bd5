// Thread-count policy and contiguous work partitioning for sweeps.
#pragma once

#include <cstdint>
#include <functional>

namespace cardnet {

// Worker count from the CARDNET_THREADS environment variable; 0 or unset
// means one worker per hardware thread.
int worker_count();

// Splits [0, total) into at most `workers` contiguous ranges and runs
// fn(chunk_index, begin, end) on its own thread per range. Chunk indices are
// dense from 0, so callers can merge per-chunk results in order.
void parallel_chunks(std::uint64_t total, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace cardnet
