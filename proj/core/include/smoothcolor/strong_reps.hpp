#pragma once

// Strong representatives p = k*n + 1: testing, smallest-k search, density
// counting, the order-5 classification, and weak representations for cyclic
// Cayley tables.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smoothcolor/cayley.hpp"
#include "smoothcolor/coloring.hpp"
#include "smoothcolor/smooth.hpp"

namespace smoothcolor {

struct Overflow : std::runtime_error {
    Overflow(const std::string& what) : std::runtime_error(what) {}
};
struct NotAStrongRep : std::runtime_error {
    NotAStrongRep(const std::string& what) : std::runtime_error(what) {}
};
struct ScanExhausted : std::runtime_error {
    ScanExhausted(const std::string& what) : std::runtime_error(what) {}
};

// True iff p = k*n + 1 is prime and 1^k, ..., n^k are pairwise distinct mod p.
bool is_strong_representative(u64 n, u64 k);

// Least k <= k_limit with is_strong_representative(n, k); the search shards
// k-ranges across threads and reports progress to `progress` if given.
std::optional<std::pair<u64, u64>> smallest_strong_representative(
    u64 n, u64 k_limit = 100'000'000, unsigned threads = 0,
    const std::function<void(u64)>& progress = nullptr);

// The power-residue coloring c(m) = m^k mod p. Throws NotAStrongRep.
Coloring coloring_from_strong_rep(u64 n, u64 k, u64 p);

// pi_n(N): number of strong representatives p <= N of order n.
u64 count_strong_reps(u64 n, u64 N, unsigned threads = 0);

enum class Order5Class { c1, c5 };

// Which of the two 5-satisfactory colorings p = 5k+1 strongly represents:
// c1 iff 6^k = 1 (mod p), c5 iff 6^k = 5^k (mod p).
Order5Class classify_order5(u64 p, u64 k);

struct Order5Density {
    u64 c1 = 0, c5 = 0, all = 0, totient_primes = 0;  // |C1|, |C5|, |C|, |C_T|
};

// Counts over all primes p <= N with p = 1 (mod 5).
Order5Density density_table_order5(u64 N, unsigned threads = 0);

struct WeakRepresentation {
    std::vector<u64> qs;  // one prime per prime p_i <= n, in prime order
    u64 P = 0, k = 0, g = 0;
    // The induced coloring d(prod p_i^{a_i}) = prod q_i^{k a_i} mod P,
    // materialized on the default window.
    std::optional<Coloring> coloring;
};

// Remark-style weak representation of a cyclic satisfactory table: pick a
// primitive root g mod P, an isomorphism h onto Z/nZ, and for each prime
// p_i <= n the smallest prime q_i = g^{h(p_i)} (mod P) with q_i <= scan_limit.
WeakRepresentation weak_representation(const CayleyTable& table, u64 P,
                                       u64 scan_limit = 1'000'000'000);

}  // namespace smoothcolor
