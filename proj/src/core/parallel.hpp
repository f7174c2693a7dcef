#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace iscat::par {

// Worker count used by parallel_for.  Default 1; the CLI sets it from
// --threads.  Results never depend on this value: work is partitioned by
// index and reductions are associated by a fixed tree, so any thread count
// produces bit-identical output.
void set_threads(int t);
int threads();

// Run fn(i) for i in 0..n-1.  fn must write only to index-addressed slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Fixed-topology pairwise tree sum: association depends only on n.
template <typename T>
T pairwise_sum(const T* v, std::size_t n) {
    if (n == 0) return T{};
    if (n <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace iscat::par
