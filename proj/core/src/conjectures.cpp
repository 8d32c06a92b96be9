#include "smoothcolor/conjectures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace smoothcolor {

u64 graham_ratio(const std::vector<u64>& a) {
    if (a.empty()) throw std::invalid_argument("set must be nonempty");
    u64 best = 0;
    for (u64 x : a)
        for (u64 y : a) best = std::max(best, x / std::gcd(x, y));
    return best;
}

u64 pilz_symmetric_difference(const std::vector<u64>& a, u64 n) {
    std::map<u64, int> parity;
    for (u64 i = 1; i <= n; ++i)
        for (u64 x : a) parity[i * x] ^= 1;
    u64 size = 0;
    for (const auto& [v, odd] : parity) size += static_cast<u64>(odd);
    return size;
}

u64 pilz_symmetric_difference_setwise(const std::vector<u64>& a, u64 n) {
    std::set<u64> acc;
    for (u64 i = 1; i <= n; ++i) {
        std::set<u64> next;
        for (u64 x : a) {
            u64 v = i * x;
            if (!acc.erase(v)) next.insert(v);
        }
        acc.insert(next.begin(), next.end());
    }
    return acc.size();
}

HarnessResult graham_harness(u64 trials, u64 seed) {
    std::mt19937_64 rng(seed);
    HarnessResult res;
    for (u64 t = 0; t < trials; ++t) {
        std::uniform_int_distribution<u64> size_d(1, 30);
        std::uniform_int_distribution<u64> val_d(1, 1000);
        std::set<u64> s;
        u64 m = size_d(rng);
        while (s.size() < m) s.insert(val_d(rng));
        std::vector<u64> a(s.begin(), s.end());
        ++res.trials;
        if (graham_ratio(a) < a.size()) {
            ++res.violations;
            res.counterexamples.push_back(a);
        }
    }
    return res;
}

HarnessResult pilz_harness(u64 trials, u64 seed) {
    std::mt19937_64 rng(seed);
    HarnessResult res;
    for (u64 t = 0; t < trials; ++t) {
        std::uniform_int_distribution<u64> size_d(0, 14);
        std::uniform_int_distribution<u64> val_d(1, 1000);
        std::uniform_int_distribution<u64> n_d(1, 30);
        u64 m = 2 * size_d(rng) + 1;  // odd size
        std::set<u64> s;
        while (s.size() < m) s.insert(val_d(rng));
        std::vector<u64> a(s.begin(), s.end());
        u64 n = n_d(rng);
        ++res.trials;
        u64 by_parity = pilz_symmetric_difference(a, n);
        if (by_parity != pilz_symmetric_difference_setwise(a, n) || by_parity < n) {
            ++res.violations;
            res.counterexamples.push_back(a);
        }
    }
    return res;
}

}  // namespace smoothcolor
