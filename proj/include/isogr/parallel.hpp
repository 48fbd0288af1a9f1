#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace isogr {

// Process-wide worker count used by the verification pipelines. 0 or 1 runs
// everything on the calling thread.
inline std::size_t& worker_count() {
    static std::size_t n = 1;
    return n;
}

// Runs f(i) for i in [0, count) on up to worker_count() threads and returns
// the results in index order, so the output never depends on scheduling.
// The first exception thrown by any unit is rethrown on the caller.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& f) {
    std::vector<R> out(count);
    const std::size_t threads = std::min(worker_count(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace isogr
