#pragma once
// Bounded worker-pool map. Results land at their input index, so output
// order never depends on scheduling.

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gistchain {

class Semaphore {
public:
    explicit Semaphore(size_t count) : count_(count) {}

    void acquire() {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return count_ > 0; });
        --count_;
    }

    void release() {
        {
            std::lock_guard<std::mutex> lock(mu_);
            ++count_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    size_t count_;
};

// Applies fn to every element of items under at most `workers` threads.
// The first exception thrown by fn is rethrown on the caller thread.
template <typename In, typename Out>
std::vector<Out> parallel_map(const std::vector<In>& items, size_t workers,
                              const std::function<Out(const In&)>& fn) {
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    if (workers == 0) workers = 1;
    const size_t nthreads = std::min(workers, items.size());
    if (nthreads == 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();

    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace gistchain
