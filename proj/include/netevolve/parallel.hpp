#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace netevolve {

struct ParallelOptions {
    unsigned threads = 1;
};

/// Worker count from NETEVOLVE_THREADS, or `fallback` when unset or invalid.
unsigned threads_from_env(unsigned fallback = 1);

/// Runs fn(chunk) for chunk in [0, n_chunks) on up to `threads` workers.
/// Callers keep results per chunk and reduce them in chunk order, which makes
/// the outcome independent of the worker count.
template <class Fn>
void parallel_chunks(std::size_t n_chunks, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n_chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < n_chunks; c = next++) {
                try {
                    fn(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace netevolve
