#pragma once

// Exact enumeration of all k-representatives for fixed k: primes p = kn+1
// strongly representing their order n. Finiteness comes from a divisibility
// bound: p must divide the constant obtained by evaluating a deflated
// power-sum polynomial at -1/k.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smoothcolor/smooth.hpp"

namespace smoothcolor {

struct DividesExactly : std::runtime_error {
    DividesExactly(const std::string& what) : std::runtime_error(what) {}
};
struct FactoringTooHard : std::runtime_error {
    FactoringTooHard(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational polynomial, coefficients ascending by degree.
struct RationalPolynomial {
    std::vector<mpq_class> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    mpq_class operator()(const mpq_class& x) const;
    void trim();  // drop trailing zero coefficients
};

// B_m(x), exact.
RationalPolynomial bernoulli_polynomial(unsigned m);

// P_k with P_k(n) = 1^k + ... + n^k = (B_{k+1}(n+1) - B_{k+1}(0)) / (k+1).
RationalPolynomial power_sum_polynomial(unsigned k);

// The bound constant: |numerator of poly(-1/k)| after reduction. Intended for
// polynomials already cleared of the trivial factors x, x+1, 2x+1 (none of
// which can contain p = kn+1 for k > 2). Throws DividesExactly when
// poly(-1/k) = 0, i.e. kx+1 divides poly and the bound is vacuous.
mpz_class remainder_constant(const RationalPolynomial& poly, unsigned k);

// poly with all factors x, (x+1), (2x+1) divided out, as a primitive integer
// polynomial.
RationalPolynomial deflate_trivial_factors(const RationalPolynomial& poly);

enum class KRepMethod { none_by_thm, bound_p_lt_k2, faulhaber_remainder, bernoulli_2k_fallback };

struct KRepReport {
    unsigned k = 0;
    KRepMethod method = KRepMethod::faulhaber_remainder;
    mpz_class bound_constant = 0;  // 0 when unused
    std::vector<std::pair<u64, u64>> candidates;  // (n, p), p = kn+1 prime
    std::vector<std::pair<u64, u64>> verified;    // subset passing the strong-rep test
    bool complete = true;                         // false if factoring gave up
};

// Complete list of k-representatives for k >= 3: k = 3 has none; multiples of
// 4 scan all primes p < k^2; otherwise candidates are the prime divisors
// p = 1 (mod k) of the bound constant, each verified directly.
KRepReport enumerate_k_representatives(unsigned k);

// The exhaustive p < k^2 scan for multiples of 4.
std::vector<std::pair<u64, u64>> four_m_representatives(unsigned k);

}  // namespace smoothcolor
