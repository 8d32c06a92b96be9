#pragma once

// Abelian group structures on [n] extending partial multiplication
// (a (+) b = ab whenever a, b, ab <= n), stored as explicit Cayley tables.

#include <cstdint>
#include <string>
#include <vector>

namespace smoothcolor {

struct CayleyTable {
    int n = 0;
    // Row-major n x n table over [n]; entry(a,b) with 1-based a, b.
    std::vector<int> cells;

    CayleyTable() = default;
    CayleyTable(int n_, std::vector<int> cells_) : n(n_), cells(std::move(cells_)) {}

    int op(int a, int b) const { return cells[(a - 1) * n + (b - 1)]; }
    void set(int a, int b, int v) { cells[(a - 1) * n + (b - 1)] = v; }

    // 1 is always the identity by the compatibility requirement.
    int inverse(int a) const;
    // a combined with itself e times; e may be negative or zero.
    int power(int a, long long e) const;
    int order_of(int a) const;

    // Full validity check: Latin rows/columns, identity 1, commutativity,
    // associativity (all triples), and a(+)b = ab whenever ab <= n.
    bool valid(std::string* why = nullptr) const;

    // Multiset of invariant factors d_1 | d_2 | ... of the group, computed
    // from the table (identifies the isomorphism class).
    std::vector<int> invariant_factors() const;

    auto operator<=>(const CayleyTable&) const = default;
};

}  // namespace smoothcolor
