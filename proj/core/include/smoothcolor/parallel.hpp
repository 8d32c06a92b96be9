#pragma once

// Worker-count resolution and a small block-parallel helper. Results must be
// independent of the thread count; callers merge per-shard results
// deterministically (minimum, sum, sorted concatenation).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace smoothcolor {

// requested > 0 wins; otherwise SMOOTHCOLOR_THREADS; otherwise hardware.
inline unsigned worker_count(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SMOOTHCOLOR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Run fn(shard_index, shard_count) on `shards` threads and join.
inline void run_sharded(unsigned shards, const std::function<void(unsigned, unsigned)>& fn) {
    if (shards <= 1) {
        fn(0, 1);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(fn, s, shards);
    for (auto& t : pool) t.join();
}

}  // namespace smoothcolor
