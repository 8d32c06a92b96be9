#pragma once

// Falsification harnesses for two arithmetic conjectures related to
// satisfactory colorings: the gcd-ratio lower bound and the dilation
// symmetric-difference lower bound.

#include <cstdint>
#include <vector>

#include "smoothcolor/smooth.hpp"

namespace smoothcolor {

// max over i,j of a_i / gcd(a_i, a_j) for a strictly increasing positive set.
u64 graham_ratio(const std::vector<u64>& a);

// |A (symmetric difference) 2A (symmetric difference) ... (symmetric
// difference) nA|, computed by parity counting over the pairs (i, a).
u64 pilz_symmetric_difference(const std::vector<u64>& a, u64 n);

// Same quantity by iterated set algebra; must always agree.
u64 pilz_symmetric_difference_setwise(const std::vector<u64>& a, u64 n);

struct HarnessResult {
    u64 trials = 0;
    u64 violations = 0;
    std::vector<std::vector<u64>> counterexamples;  // persisted sets, if any
};

// Randomized property runs with a fixed seed; deterministic for a given seed.
HarnessResult graham_harness(u64 trials, u64 seed);
HarnessResult pilz_harness(u64 trials, u64 seed);

}  // namespace smoothcolor
