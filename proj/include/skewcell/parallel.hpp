#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace skewcell {

// SKEWCELL_THREADS caps worker threads; 0 or unset means sequential.
inline unsigned thread_cap() {
    const char* s = std::getenv("SKEWCELL_THREADS");
    if (!s) return 0;
    long v = std::atol(s);
    return v < 0 ? 0 : (unsigned)v;
}

// Index-parallel loop. Each iteration writes only to its own slot, so the
// result is identical for any thread count.
template <class F>
void parallel_for(size_t n, F&& fn) {
    unsigned cap = thread_cap();
    if (cap <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = (unsigned)std::min<size_t>(cap, n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace skewcell
