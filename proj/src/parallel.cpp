#include "lgbdf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lgbdf {

namespace {
std::atomic<int> g_threads{1};
}

void set_num_threads(int n) { g_threads.store(std::max(1, n)); }
int num_threads() { return g_threads.load(); }

namespace detail {

void parallel_for_impl(std::size_t begin, std::size_t end, void* ctx,
                       void (*body)(void*, std::size_t, std::size_t)) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    const int nt = static_cast<int>(std::min<std::size_t>(num_threads(), count));
    if (nt <= 1) {
        body(ctx, begin, end);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (count + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const std::size_t lo = begin + t * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                body(ctx, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

}  // namespace lgbdf
