#ifndef VCLAB_PARALLEL_HPP
#define VCLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vclab {

/// Worker count from VCLAB_JOBS, falling back to hardware concurrency.
unsigned default_jobs();

namespace detail {

class FirstError {
public:
    void capture()
    {
        std::lock_guard lock(mutex_);
        if (!error_)
            error_ = std::current_exception();
    }
    void rethrow() const
    {
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

inline void fetch_min(std::atomic<std::size_t> &target, std::size_t value)
{
    std::size_t current = target.load();
    while (value < current && !target.compare_exchange_weak(current, value)) {
    }
}

} // namespace detail

/**
 * Runs body(i) for every i in [0, count), chunks handed out in increasing
 * order. The assignment of chunks to workers is unspecified, so body must
 * only write to slots owned by i.
 */
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, std::size_t chunk, Body &&body)
{
    chunk = std::max<std::size_t>(chunk, 1);
    if (jobs <= 1 || count <= chunk) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    detail::FirstError error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        try {
            for (;;) {
                std::size_t start = next.fetch_add(chunk);
                if (start >= count || failed.load())
                    return;
                std::size_t end = std::min(count, start + chunk);
                for (std::size_t i = start; i < end; ++i)
                    body(i);
            }
        } catch (...) {
            failed = true;
            error.capture();
        }
    };
    std::vector<std::thread> threads;
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>((count + chunk - 1) / chunk));
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        threads.emplace_back(worker);
    for (auto &t : threads)
        t.join();
    error.rethrow();
}

/**
 * Smallest i in [0, count) with pred(i), or count if none. The result is
 * independent of the worker count: every index below the returned one is
 * evaluated.
 */
template <class Pred>
std::size_t parallel_find_first(std::size_t count, unsigned jobs, std::size_t chunk, Pred &&pred)
{
    chunk = std::max<std::size_t>(chunk, 1);
    if (jobs <= 1 || count <= chunk) {
        for (std::size_t i = 0; i < count; ++i)
            if (pred(i))
                return i;
        return count;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    detail::FirstError error;
    auto worker = [&] {
        try {
            for (;;) {
                std::size_t start = next.fetch_add(chunk);
                if (start >= count || start >= best.load())
                    return;
                std::size_t end = std::min(count, start + chunk);
                for (std::size_t i = start; i < end && i < best.load(); ++i) {
                    if (pred(i)) {
                        detail::fetch_min(best, i);
                        break;
                    }
                }
            }
        } catch (...) {
            detail::fetch_min(best, 0);
            error.capture();
        }
    };
    std::vector<std::thread> threads;
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>((count + chunk - 1) / chunk));
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        threads.emplace_back(worker);
    for (auto &t : threads)
        t.join();
    error.rethrow();
    return best.load();
}

} // namespace vclab

#endif
