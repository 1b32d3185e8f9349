#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace guechan {

// Worker count: GUECHAN_THREADS if set, else the hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("GUECHAN_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static block partition of [0, n). fn(i) must be safe to run concurrently
// for distinct i; iteration order within a block is ascending, so results
// indexed by i are deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w]() {
            std::size_t lo = n * w / nw;
            std::size_t hi = n * (w + 1) / nw;
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace guechan
