#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace depcodec {

// Worker count: DEPCODEC_WORKERS if set, else hardware concurrency, never 0.
inline int default_workers() {
    if (const char* env = std::getenv("DEPCODEC_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn(i) for i in [0, count) across workers; results land at their
// index, so output order never depends on scheduling. The first exception
// is rethrown after all workers finish.
template <class R, class Fn>
std::vector<R> parallel_map(size_t count, int workers, Fn&& fn) {
    std::vector<R> out(count);
    if (count == 0) return out;
    const int w = std::max(1, std::min(workers, static_cast<int>(count)));
    if (w == 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(w));
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace depcodec
