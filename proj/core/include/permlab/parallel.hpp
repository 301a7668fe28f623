#pragma once

// Deterministic work partitioning. Work is split into fixed-size blocks
// whose boundaries do not depend on the worker count, so block-indexed
// results can be reduced in a fixed order and any float or big-integer
// reduction is bit-identical no matter how many threads ran.

#include <cstdint>
#include <functional>

namespace permlab {

// Worker cap from PERMLAB_THREADS (0 or unset means hardware concurrency).
int worker_count();

// Invokes fn(block_begin, block_end, block_index) for consecutive blocks of
// size block_size covering [begin, end), using up to worker_count() threads.
// Distinct blocks may run concurrently; fn must not touch another block's
// state.
void for_blocks(std::int64_t begin, std::int64_t end, std::int64_t block_size,
                const std::function<void(std::int64_t, std::int64_t, std::size_t)>& fn);

std::size_t block_count(std::int64_t begin, std::int64_t end,
                        std::int64_t block_size);

}  // namespace permlab
