#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace diskharm {

// Worker-count bound for parallel_for. 0 means hardware concurrency.
void set_max_threads(unsigned n);
unsigned max_threads();

// Static block partition of [0, n); results must not depend on the split,
// so callers only write disjoint output ranges.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned t = max_threads();
    if (t <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    t = static_cast<unsigned>(std::min<std::size_t>(t, n));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(t);
    workers.reserve(t);
    std::size_t chunk = (n + t - 1) / t;
    for (unsigned w = 0; w < t; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, &err = errors[w], lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                err = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace diskharm
