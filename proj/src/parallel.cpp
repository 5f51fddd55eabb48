#include "qmx/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace qmx {

namespace {
std::atomic<int> g_workers{1};
// Loops shorter than this run inline; thread startup would dominate.
constexpr std::size_t kMinParallel = 4096;
}  // namespace

void set_worker_count(int n) { g_workers.store(n < 1 ? 1 : n); }

int worker_count() { return g_workers.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const int workers = g_workers.load();
  if (workers <= 1 || n < kMinParallel) {
    body(0, n);
    return;
  }
  const std::size_t w = static_cast<std::size_t>(workers);
  const std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t b = t * chunk;
    if (b >= n) break;
    const std::size_t e = std::min(n, b + chunk);
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qmx
