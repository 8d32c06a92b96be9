#include "smoothcolor/smooth.hpp"

#include <algorithm>
#include <numeric>

namespace smoothcolor {

std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (u64 p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (u64 q = p * p; q <= n; q += p) composite[q] = true;
    }
    return out;
}

ExponentVector SmoothContext::factor(u64 m) const {
    const u64 original = m;
    ExponentVector e(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        while (m % primes[i] == 0) {
            m /= primes[i];
            ++e[i];
        }
    }
    if (m != 1) {
        // m's remaining part is coprime to all primes <= n; report its least
        // prime factor as the witness.
        u64 w = m;
        for (u64 d = 2; d * d <= m; ++d) {
            if (m % d == 0) { w = d; break; }
        }
        throw NotSmooth(original, w);
    }
    return e;
}

u64 SmoothContext::reconstruct(const ExponentVector& e) const {
    u64 m = 1;
    for (std::size_t i = 0; i < e.size() && i < primes.size(); ++i)
        for (int j = 0; j < e[i]; ++j) m *= primes[i];
    return m;
}

bool SmoothContext::is_smooth(u64 m) const {
    for (u64 p : primes)
        while (m % p == 0) m /= p;
    return m == 1;
}

std::vector<u64> SmoothContext::enumerate(u64 bound) const {
    // Depth-first product generation over the prime basis.
    std::vector<u64> out;
    auto rec = [&](auto&& self, std::size_t i, u64 value) -> void {
        if (i == primes.size()) {
            out.push_back(value);
            return;
        }
        for (u64 v = value;; ) {
            self(self, i + 1, v);
            if (v > bound / primes[i]) break;
            v *= primes[i];
        }
    };
    if (bound >= 1) rec(rec, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 m) {
    if (m < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (m % p == 0) return m == p;
    }
    // Miller-Rabin with the 12-prime base set {2,...,37}, deterministic for
    // all m < 2^64 (Sorenson-Webster).
    u64 d = m - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1 && witness; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 m) {
    // Brent-style cycle finding; m must be odd, composite, not a prime power
    // handled elsewhere. Returns a nontrivial factor.
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return (mulmod(x, x, m) + c) % m; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, m);
        }
        if (d != m) return d;
    }
}

void factor_rec(u64 m, std::vector<u64>& primes) {
    if (m == 1) return;
    if (is_prime_u64(m)) {
        primes.push_back(m);
        return;
    }
    u64 d = pollard_rho(m);
    factor_rec(d, primes);
    factor_rec(m / d, primes);
}

}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 m) {
    std::vector<u64> parts;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (m % p == 0) {
            parts.push_back(p);
            m /= p;
        }
    }
    factor_rec(m, parts);
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : parts) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.push_back({p, 1});
    }
    return out;
}

}  // namespace smoothcolor
