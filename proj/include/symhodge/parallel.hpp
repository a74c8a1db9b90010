#ifndef SYMHODGE_PARALLEL_HPP
#define SYMHODGE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace symhodge {

/// Worker count for `jobs` independent tasks. Defaults to the hardware
/// concurrency, capped by the SYMHODGE_THREADS environment variable when set.
inline unsigned effective_thread_count(std::size_t jobs) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0)
        threads = 1;
    if (const char* cap_text = std::getenv("SYMHODGE_THREADS")) {
        try {
            const long cap = std::stol(cap_text);
            if (cap >= 1 && static_cast<unsigned long>(cap) < threads)
                threads = static_cast<unsigned>(cap);
        } catch (const std::exception&) {
            // unparseable cap: keep the default
        }
    }
    if (jobs < threads)
        threads = static_cast<unsigned>(jobs);
    return threads == 0 ? 1 : threads;
}

/// Evaluates fn(0..count-1) on up to effective_thread_count(count) threads
/// and returns the results in index order, so callers reduce
/// deterministically regardless of scheduling.
template <typename F>
auto parallel_map(std::size_t count, F&& fn) -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(count);
    const unsigned threads = effective_thread_count(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& worker : pool)
        worker.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

}  // namespace symhodge

#endif
