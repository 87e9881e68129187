#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace symtor {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(0..count-1), possibly on several threads.  Work items must be
// independent; callers keep determinism by writing into preallocated slots.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    const int t = resolve_threads(threads);
    if (t <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(t), count);
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace symtor
