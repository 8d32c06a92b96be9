#include "smoothcolor/strong_reps.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "smoothcolor/parallel.hpp"

namespace smoothcolor {

namespace {

// Cheap composite filter before the full Miller-Rabin test.
constexpr u64 kSmallPrimes[] = {41,  43,  47,  53,  59,  61,  67,  71,  73,  79,
                                83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
                                137, 139, 149, 151, 157, 163, 167, 173, 179, 181};

bool distinct_powers(u64 n, u64 k, u64 p) {
    // n is tiny (<= 64 in all searches); linear scan with early exit.
    u64 seen[64];
    for (u64 i = 1; i <= n; ++i) {
        u64 r = powmod(i, k, p);
        for (u64 j = 0; j + 1 < i; ++j)
            if (seen[j] == r) return false;
        seen[i - 1] = r;
    }
    return true;
}

u64 checked_p(u64 n, u64 k) {
    if (n == 0 || k == 0) throw std::invalid_argument("n and k must be positive");
    constexpr u64 kMax = (u64{1} << 63) - 1;
    if (n > (kMax - 1) / k) throw Overflow("k*n + 1 exceeds 2^63");
    return k * n + 1;
}

bool is_strong_rep_known_p(u64 n, u64 k, u64 p) {
    if (!is_prime_u64(p)) return false;
    return n <= 64 ? distinct_powers(n, k, p) : [&] {
        std::vector<u64> rs(n);
        for (u64 i = 1; i <= n; ++i) rs[i - 1] = powmod(i, k, p);
        std::sort(rs.begin(), rs.end());
        return std::adjacent_find(rs.begin(), rs.end()) == rs.end();
    }();
}

}  // namespace

bool is_strong_representative(u64 n, u64 k) {
    return is_strong_rep_known_p(n, k, checked_p(n, k));
}

std::optional<std::pair<u64, u64>> smallest_strong_representative(
    u64 n, u64 k_limit, unsigned threads, const std::function<void(u64)>& progress) {
    const unsigned nw = worker_count(threads);
    const u64 block = u64{1} << 16;
    for (u64 k0 = 1; k0 <= k_limit; k0 += block * nw) {
        if (progress) progress(k0);
        std::atomic<u64> best{std::numeric_limits<u64>::max()};
        run_sharded(nw, [&](unsigned s, unsigned) {
            u64 lo = k0 + static_cast<u64>(s) * block;
            u64 hi = std::min(lo + block - 1, k_limit);
            for (u64 k = lo; k <= hi && k < best.load(std::memory_order_relaxed); ++k) {
                u64 p = checked_p(n, k);
                bool composite = false;
                for (u64 q : kSmallPrimes)
                    if (p % q == 0 && p != q) { composite = true; break; }
                if (composite || !is_strong_rep_known_p(n, k, p)) continue;
                u64 cur = best.load(std::memory_order_relaxed);
                while (k < cur && !best.compare_exchange_weak(cur, k)) {
                }
                break;
            }
        });
        u64 k = best.load();
        if (k != std::numeric_limits<u64>::max()) return std::make_pair(k, k * n + 1);
    }
    return std::nullopt;
}

Coloring coloring_from_strong_rep(u64 n, u64 k, u64 p) {
    if (p != checked_p(n, k) || !is_strong_rep_known_p(n, k, p))
        throw NotAStrongRep("p = " + std::to_string(p) + " is not a strong representative of order " +
                            std::to_string(n));
    return Coloring(SmoothContext(n), PowerResidueColoring{k, p});
}

u64 count_strong_reps(u64 n, u64 N, unsigned threads) {
    if (N < n + 2) return 0;
    const u64 k_max = (N - 1) / n;
    const unsigned nw = worker_count(threads);
    std::vector<u64> partial(nw, 0);
    run_sharded(nw, [&](unsigned s, unsigned total) {
        u64 count = 0;
        for (u64 k = 1 + s; k <= k_max; k += total)
            if (is_strong_representative(n, k)) ++count;
        partial[s] = count;
    });
    u64 sum = 0;
    for (u64 c : partial) sum += c;
    return sum;
}

Order5Class classify_order5(u64 p, u64 k) {
    if (p != 5 * k + 1 || !is_strong_rep_known_p(5, k, p))
        throw NotAStrongRep(std::to_string(p) + " is not a strong representative of order 5");
    u64 six = powmod(6, k, p);
    if (six == 1 % p) return Order5Class::c1;
    if (six == powmod(5, k, p)) return Order5Class::c5;
    // Impossible: there are only two 5-satisfactory colorings.
    throw NotAStrongRep("power-residue coloring of " + std::to_string(p) +
                        " restricted to K_5 matches neither closed form");
}

Order5Density density_table_order5(u64 N, unsigned threads) {
    std::vector<u64> candidates;  // primes p <= N with p = 1 (mod 5)
    for (u64 p : primes_upto(N))
        if (p % 5 == 1) candidates.push_back(p);
    const unsigned nw = worker_count(threads);
    std::vector<Order5Density> partial(nw);
    run_sharded(nw, [&](unsigned s, unsigned total) {
        Order5Density d;
        for (std::size_t i = s; i < candidates.size(); i += total) {
            u64 p = candidates[i];
            ++d.totient_primes;
            u64 k = (p - 1) / 5;
            if (!distinct_powers(5, k, p)) continue;
            ++d.all;
            if (classify_order5(p, k) == Order5Class::c1) ++d.c1;
            else ++d.c5;
        }
        partial[s] = d;
    });
    Order5Density out;
    for (const auto& d : partial) {
        out.c1 += d.c1;
        out.c5 += d.c5;
        out.all += d.all;
        out.totient_primes += d.totient_primes;
    }
    return out;
}

WeakRepresentation weak_representation(const CayleyTable& table, u64 P, u64 scan_limit) {
    const int n = table.n;
    auto inv = table.invariant_factors();
    if (inv.size() != 1 || inv[0] != n)
        throw std::invalid_argument("table is not cyclic");
    if (!is_prime_u64(P) || (P - 1) % static_cast<u64>(n) != 0)
        throw std::invalid_argument("P must be a prime congruent to 1 mod n");

    // Isomorphism h : [n] -> Z/nZ via discrete log in the table.
    int gen = 0;
    for (int a = 2; a <= n; ++a)
        if (table.order_of(a) == n) { gen = a; break; }
    std::vector<int> h(static_cast<std::size_t>(n) + 1, -1);
    int x = 1;
    for (int j = 0; j < n; ++j) {
        h[static_cast<std::size_t>(x)] = j;
        x = table.op(x, gen);
    }

    WeakRepresentation out;
    out.P = P;
    out.k = (P - 1) / static_cast<u64>(n);

    // Primitive root mod P.
    auto fac = factor_u64(P - 1);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac)
            if (powmod(g, (P - 1) / q, P) == 1) { ok = false; break; }
        if (ok) { out.g = g; break; }
    }

    // g^k generates the order-n subgroup; map h through it via candidate
    // primes q_i = g^{h(p_i)} (mod P).
    SmoothContext ctx(static_cast<u64>(n));
    for (u64 pi : ctx.primes) {
        u64 target = powmod(out.g, static_cast<u64>(h[pi]), P);
        u64 q = target == 0 ? P : target;
        for (; q <= scan_limit; q += P)
            if (q > 1 && is_prime_u64(q)) break;
        if (q > scan_limit)
            throw ScanExhausted("no prime = " + std::to_string(target) + " (mod " +
                                std::to_string(P) + ") below the scan limit");
        out.qs.push_back(q);
    }

    // Materialize d on the default window: d(prod p_i^{a_i}) = prod q_i^{k a_i}.
    Box window = default_window(ctx);
    WindowColoring w;
    w.window = window;
    w.labels.assign(window.size(), -1);
    for (std::size_t idx = 0; idx < w.labels.size(); ++idx) {
        ExponentVector v = window.at(idx);
        u64 r = 1 % P;
        for (std::size_t i = 0; i < v.size(); ++i) {
            u64 e = mulmod(out.k % (P - 1), static_cast<u64>(v[i]), P - 1);
            r = mulmod(r, powmod(out.qs[i] % P, e, P), P);
        }
        w.labels[idx] = static_cast<long long>(r);
    }
    out.coloring = Coloring(ctx, std::move(w));
    return out;
}

}  // namespace smoothcolor
