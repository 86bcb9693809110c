#ifndef WEYLCONES_PARALLEL_HPP
#define WEYLCONES_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace weylcones {

namespace detail {
inline std::atomic<int> thread_count_setting{1};
}

inline void set_thread_count(int threads) {
    detail::thread_count_setting.store(std::max(1, threads));
}
inline int thread_count() { return detail::thread_count_setting.load(); }

/**
 * Runs fn over contiguous stripes of [0, total). Stripe boundaries depend
 * only on `total` and the configured worker count, and callers merge stripe
 * outputs in stripe order, so results never depend on scheduling.
 */
inline void parallel_stripes(long long total,
                             const std::function<void(int, long long, long long)>& fn) {
    const int threads = thread_count();
    if (threads <= 1 || total < 2 * threads) {
        if (total > 0) fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int s = 0; s < threads; ++s) {
        long long begin = total * s / threads;
        long long end = total * (s + 1) / threads;
        pool.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace weylcones

#endif
