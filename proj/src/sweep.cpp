#include "secrecy/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace secrecy {

namespace {
constexpr std::size_t kChunk = 64;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

Region2D union_hull(std::size_t count, const std::function<Region2D(std::size_t)>& region_of,
                    unsigned threads) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<Region2D> partial(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    std::vector<RatePoint> pts;
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        pts.clear();
        const std::size_t end = std::min(count, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          const Region2D r = region_of(i);
          pts.insert(pts.end(), r.hull().begin(), r.hull().end());
        }
        partial[c] = hull2d(pts);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };

  const unsigned n = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(chunks, 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<RatePoint> pts{{0.0, 0.0}};
  for (const auto& r : partial) pts.insert(pts.end(), r.hull().begin(), r.hull().end());
  return hull2d(pts);
}

}  // namespace secrecy
