#include "svddcap/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace svddcap {

unsigned max_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SVDDCAP_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) {
      return static_cast<unsigned>(value);
    }
  }
  return hw;
}

unsigned effective_workers(unsigned requested) {
  return std::clamp(requested, 1u, max_workers());
}

void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  workers = effective_workers(workers);
  const std::size_t n_threads = std::min<std::size_t>(workers, count);
  if (n_threads <= 1) {
    fn(0, count);
    return;
  }
  const std::size_t base = count / n_threads;
  const std::size_t extra = count % n_threads;
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  std::size_t begin = 0;
  for (std::size_t t = 0; t < n_threads; ++t) {
    const std::size_t len = base + (t < extra ? 1 : 0);
    pool.emplace_back(fn, begin, begin + len);
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace svddcap
