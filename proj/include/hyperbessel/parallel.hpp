#pragma once

// Minimal index-parallel loop. HB_THREADS caps the worker count; results are
// written by index so output order never depends on scheduling.

#include <cstdlib>
#include <thread>
#include <vector>

namespace hb {

inline int max_threads() {
    if (const char* env = std::getenv("HB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_for(long n, F&& body) {
    int workers = max_threads();
    if (workers <= 1 || n < 2 * workers) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace hb
