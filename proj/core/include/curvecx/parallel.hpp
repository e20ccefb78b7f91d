#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace ccx {

inline int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs f(0..n-1); results must be written to per-index slots so the output
// is independent of the job count.
template <class F>
void parallel_for(int n, int jobs, F&& f) {
    if (jobs <= 0) jobs = default_jobs();
    jobs = std::min(jobs, n > 0 ? n : 1);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < n;) f(i);
        });
    for (auto& th : threads) th.join();
}

}  // namespace ccx
