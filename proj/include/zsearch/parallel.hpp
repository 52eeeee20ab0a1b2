#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace zsearch {

inline int default_threads() {
    if (const char* env = std::getenv("ZSEARCH_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, count). Results must be written to pre-sized slots;
// iteration order is unspecified but the index assignment is deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, int threads = 0) {
    if (threads <= 0) threads = default_threads();
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    pool.reserve(workers);
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    failed.store(true);
                    throw;  // std::terminate: worker exceptions are bugs here
                }
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace zsearch
