#ifndef CUBICFORMS_PARALLEL_HPP
#define CUBICFORMS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cubicforms {

// Parallel map with results in input order regardless of completion
// order.  f must be safe to call concurrently.  threads == 0 means
// hardware concurrency; threads == 1 runs inline.
template <typename R, typename X, typename F>
std::vector<R> ordered_parallel_map(const std::vector<X>& xs, F&& f,
                                    unsigned threads = 0)
{
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0)
            threads = 1;
    }
    std::vector<R> out(xs.size());
    if (threads == 1 || xs.size() <= 1) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[i] = f(xs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= xs.size())
                return;
            try {
                out[i] = f(xs[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err)
                    err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
    return out;
}

} // namespace cubicforms

#endif
