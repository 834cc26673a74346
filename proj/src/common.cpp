// common.cpp — deterministic parallel map over an index range.

#include "hj/common.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace hj {

namespace {

unsigned worker_count(std::size_t n) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HJ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = static_cast<unsigned>(std::min<long>(v, 256));
    }
    return static_cast<unsigned>(std::min<std::size_t>(hw, n));
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    // Atomic work-stealing over indices; results are written by index, so the
    // output is independent of which worker handles which index.
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hj
