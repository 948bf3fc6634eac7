#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace latpoly {

/// Runs task(i) for i in [0, parts) on up to `threads` workers. Each part is
/// processed by one worker; callers store per-part results and merge them in
/// index order, so the outcome does not depend on the thread count.
inline void parallel_for_parts(std::size_t parts, unsigned threads, const std::function<void(std::size_t)>& task) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(parts, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < parts; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < parts; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace latpoly
