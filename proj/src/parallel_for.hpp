#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace labelpart::detail {

// Static block partition of [0, n) across n_threads; fn(thread_idx, begin, end).
template <typename Fn>
void parallel_blocks(std::size_t n, int n_threads, Fn&& fn) {
    if (n_threads <= 1 || n < 2) {
        fn(0, std::size_t{0}, n);
        return;
    }
    const std::size_t t = std::min<std::size_t>(n_threads, n);
    std::vector<std::thread> workers;
    workers.reserve(t);
    const std::size_t chunk = (n + t - 1) / t;
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t begin = i * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace labelpart::detail
