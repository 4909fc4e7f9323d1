#pragma once

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace eqehr {

/// Worker width: EQEHR_THREADS when set, else the hardware concurrency.
/// Outputs never depend on the width; only wall time does.
inline unsigned worker_count() {
    if (const char* env = std::getenv("EQEHR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs f(i) for i in [0, n) across workers. The caller writes results into
/// per-index slots, so scheduling order cannot affect the outcome.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    unsigned width = worker_count();
    if (n <= 1 || width <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned k = static_cast<unsigned>(std::min<std::size_t>(width, n));
    threads.reserve(k);
    for (unsigned t = 0; t < k; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace eqehr
