#pragma once

// Constructive nonmultiplicative colorings: the height-two strip families d^x
// for n = 6 and n = 8, and the six extensions d with d_5 = c for the
// 6-satisfactory coloring c(m) = m mod 7.

#include <vector>

#include "smoothcolor/coloring.hpp"

namespace smoothcolor {

// Evaluate a strip-family coloring at an exponent vector (all entries >= 0).
// Throws PrefixTooShort if the point's strip needs a seed type beyond the
// prefix, OutOfDomain on negative coordinates.
int strip_value(const StripColoring& s, const ExponentVector& v);

// The type (in [3] for n=6, [4] for n=8) of the strip containing rows
// beta = k, k+1 on the plane with extra coordinates gamma (and delta).
// k + gamma (+ delta) must be even; k = -1 is allowed.
int strip_type(const StripColoring& s, int k, int gamma, int delta = 0);

// Build d^x as a Coloring over the window [0, side)^{pi(n)}.
Coloring strip_coloring(int n, const std::vector<int>& prefix, int side);

struct StripInvariantReport {
    bool ok = true;
    u64 checked = 0;
    std::vector<std::string> failures;
};

// Verify the periodicity identities of the strip construction for every m
// with all involved products inside the window: n=6: d(8m)=d(m); n=8:
// d(16m)=d(m), d(5m)=d(12m), d(7m)=d(24m).
StripInvariantReport strip_invariants_check(const Coloring& d, const Box& window);

// All 6-satisfactory colorings d with d_5 = c, for c(m) = (m mod 7) on K_6,
// materialized as window colorings over exponent vectors (alpha, beta, gamma)
// with gamma >= -1. Found by exhaustive backtracking over the one undetermined
// row (beta = 0, gamma = -1); exactly six exist, one of them multiplicative.
std::vector<Coloring> extensions_div5(int side);

}  // namespace smoothcolor
