#include "cardnet/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cardnet {

int worker_count() {
  long requested = 0;
  if (const char* env = std::getenv("CARDNET_THREADS")) {
    char* end = nullptr;
    requested = std::strtol(env, &end, 10);
    if (end == env || requested < 0) requested = 0;
  }
  if (requested == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    requested = hw == 0 ? 1 : static_cast<long>(hw);
  }
  return static_cast<int>(std::clamp(requested, 1L, 256L));
}

void parallel_chunks(std::uint64_t total, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  if (workers <= 0) workers = worker_count();
  const std::uint64_t chunks =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total);
  if (chunks <= 1) {
    fn(0, 0, total);
    return;
  }
  const std::uint64_t per = total / chunks, extra = total % chunks;
  std::vector<std::thread> pool;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t len = per + (c < extra ? 1 : 0);
    pool.emplace_back(fn, static_cast<int>(c), begin, begin + len);
    begin += len;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace cardnet
