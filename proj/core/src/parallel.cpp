#include "permlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace permlab {

int worker_count() {
  if (const char* env = std::getenv("PERMLAB_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t block_count(std::int64_t begin, std::int64_t end,
                        std::int64_t block_size) {
  if (end <= begin) return 0;
  return static_cast<std::size_t>((end - begin + block_size - 1) / block_size);
}

void for_blocks(std::int64_t begin, std::int64_t end, std::int64_t block_size,
                const std::function<void(std::int64_t, std::int64_t, std::size_t)>& fn) {
  const std::size_t blocks = block_count(begin, end, block_size);
  if (blocks == 0) return;

  const int workers =
      std::min<int>(worker_count(), static_cast<int>(blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::int64_t lo = begin + static_cast<std::int64_t>(b) * block_size;
      fn(lo, std::min(lo + block_size, end), b);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::int64_t lo = begin + static_cast<std::int64_t>(b) * block_size;
      fn(lo, std::min(lo + block_size, end), b);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace permlab
