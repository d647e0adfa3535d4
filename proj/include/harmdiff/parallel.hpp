#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace harmdiff {

/// Worker count from HARMDIFF_WORKERS (default 1, clamped to [1, 64]).
/// Results never depend on it: workers fill independent slots and every
/// reduction runs serially in index order.
inline int worker_count() {
    const char* env = std::getenv("HARMDIFF_WORKERS");
    if (env == nullptr) return 1;
    const int n = std::atoi(env);
    if (n < 1) return 1;
    if (n > 64) return 64;
    return n;
}

/// Runs fn(i) for i in [0, n) across `workers` threads in static blocks.
template <typename Fn>
void parallel_for(int n, int workers, Fn&& fn) {
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace harmdiff
