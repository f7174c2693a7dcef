#include "core/parallel.hpp"

#include <atomic>
#include <thread>

namespace iscat::par {

namespace {
int g_threads = 1;
}

void set_threads(int t) { g_threads = t < 1 ? 1 : t; }
int threads() { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int T = g_threads;
    if (T == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    // Dynamic chunks of contiguous indices; scheduling order is irrelevant to
    // the result because fn touches only slot i.
    std::atomic<std::size_t> next{0};
    const std::size_t chunk = std::max<std::size_t>(1, n / (8 * T));
    auto worker = [&] {
        for (;;) {
            const std::size_t lo = next.fetch_add(chunk);
            if (lo >= n) return;
            const std::size_t hi = std::min(n, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (int t = 0; t < T; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace iscat::par
