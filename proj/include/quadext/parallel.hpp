#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace quadext {

/// Ordered parallel map: applies fn to every index in [0, count) using up to
/// `jobs` worker threads and returns the results in index order.  Workers
/// pull indices from a shared counter; results land in their own slot, so
/// the output is deterministic regardless of scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, const std::function<Result(std::size_t)>& fn,
                                 unsigned jobs = 0) {
    std::vector<Result> out(count);
    if (count == 0) return out;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace quadext
