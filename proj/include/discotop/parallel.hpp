#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace disco {

// Worker count: hardware concurrency capped by DISCO_TOP_THREADS.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DISCO_TOP_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Runs fn(i) for i in [begin, end). Results must be written to per-index
// slots; reductions happen after the join so output is order-independent.
inline void parallel_for(std::size_t begin, std::size_t end,
                         const std::function<void(std::size_t)>& fn) {
    const std::size_t n = end > begin ? end - begin : 0;
    const unsigned workers = thread_budget();
    if (n == 0) return;
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace disco
