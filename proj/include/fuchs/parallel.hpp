#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace fuchs {

/// Index-sharded parallel map with a deterministic reduction: results land
/// in a pre-sized vector slot per task, so the merged output is identical
/// for every worker count.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int workers, Fn&& fn) {
    std::vector<Result> results(count);
    if (count == 0) return results;
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            results[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<std::size_t>(workers, count);
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (std::thread& th : pool) th.join();
    return results;
}

} // namespace fuchs
