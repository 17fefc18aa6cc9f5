#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace homcert {

/// Index-parallel loop with deterministic output: workers pull indices from
/// a shared counter and write results into caller-owned slots.
template <typename F>
void parallel_for(int n, int jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    int count = std::min(jobs, n);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < count; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace homcert
