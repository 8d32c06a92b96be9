#pragma once

// Collision statistics of the k-th power map on [n] modulo p = kn+1:
// exact coincidence and distinct counts plus the predicted asymptotic
// constants.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "smoothcolor/smooth.hpp"

namespace smoothcolor {

struct BadModulus : std::runtime_error {
    BadModulus(const std::string& what) : std::runtime_error(what) {}
};

struct CoincidenceStats {
    u64 k = 0, p = 0, n = 0;        // n = (p-1)/k
    u64 coincidence_count = 0;      // pairs a < b <= n with a^k = b^k (mod p)
    u64 distinct_count = 0;         // |{i^k mod p : i in [n]}|
    mpq_class c_k;                  // predicted coincidence density
    mpq_class predicted_fraction;   // predicted distinct fraction
};

// Exact counts via a sorted multiplicity histogram of the n residues.
CoincidenceStats coincidence_stats(u64 k, u64 p);

// (k-1)/(2k^2) for odd k, (k-2)/(2k^2) for even k.
mpq_class elkies_constant(u64 k);

// 1 - ((k-1)^k + 1)/k^k, the predicted asymptotic distinct fraction.
mpq_class predicted_distinct_fraction(u64 k);

}  // namespace smoothcolor
