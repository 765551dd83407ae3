#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pglab {

/// Worker budget: PGLAB_THREADS when set (minimum 1), else hardware
/// concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("PGLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Splits [0, n) into contiguous chunks, one worker thread per chunk. The
/// callback receives (chunk index, begin, end); chunk count and boundaries
/// depend only on n and the budget, so chunked results can be merged
/// deterministically.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    int nc = threads;
    if (static_cast<std::size_t>(nc) > n) nc = static_cast<int>(n);
    if (nc <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nc);
    std::size_t base = n / nc, extra = n % nc, start = 0;
    for (int c = 0; c < nc; ++c) {
        std::size_t len = base + (static_cast<std::size_t>(c) < extra ? 1 : 0);
        pool.emplace_back(fn, c, start, start + len);
        start += len;
    }
    for (std::thread& t : pool) t.join();
}

} // namespace pglab
