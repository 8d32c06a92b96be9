#pragma once

// Prime generation, smooth-number factorization/enumeration, and exact 64-bit
// modular arithmetic. Everything here is pure and safe for concurrent use.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smoothcolor {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Signed exponent vector over the prime basis of a SmoothContext. Nonnegative
// vectors correspond to n-smooth numbers m = prod p_i^{e_i}; negative entries
// represent elements of the fraction group K^_n = {a/b : a,b in K_n}.
using ExponentVector = std::vector<int>;

struct NotSmooth : std::runtime_error {
    u64 m;
    u64 witness;  // a prime factor of m exceeding n
    NotSmooth(u64 m_, u64 witness_)
        : std::runtime_error("not smooth: " + std::to_string(m_) +
                             " has prime factor " + std::to_string(witness_)),
          m(m_), witness(witness_) {}
};

// The primes <= n, ascending.
std::vector<u64> primes_upto(u64 n);

// One problem instance: n, its primes p_1 < ... < p_s, and s = pi(n).
struct SmoothContext {
    u64 n = 1;
    std::vector<u64> primes;

    SmoothContext() = default;
    explicit SmoothContext(u64 n_) : n(n_), primes(primes_upto(n_)) {}

    std::size_t pi_n() const { return primes.size(); }

    // Exponent vector of m; throws NotSmooth if some prime factor exceeds n.
    ExponentVector factor(u64 m) const;

    // Inverse of factor() for nonnegative vectors.
    u64 reconstruct(const ExponentVector& e) const;

    bool is_smooth(u64 m) const;

    // All m in K_n with m <= bound, ascending. Generated by products over the
    // prime basis (no interval sieve), so large bounds are fine when pi(n) is
    // small.
    std::vector<u64> enumerate(u64 bound) const;
};

// (a*b) mod m and (base^exp) mod m with 128-bit intermediates; exact for all
// moduli below 2^63.
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic primality for every 64-bit input (Miller-Rabin with a witness
// set proven exhaustive for m < 2^64).
bool is_prime_u64(u64 m);

// Full factorization of any 64-bit integer >= 2 as ascending (prime, exponent)
// pairs; trial division for small factors, Pollard rho for the rest.
std::vector<std::pair<u64, int>> factor_u64(u64 m);

}  // namespace smoothcolor
