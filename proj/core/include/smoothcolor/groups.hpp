#pragma once

// Abelian group structures on [n] compatible with partial multiplication:
// enumeration of group types, backtracking search for all satisfactory
// Cayley tables, groupless detection, greedy/backtracked linear coefficient
// vectors, and the (Z/p^2 Z)* construction of order p^2 - p.

#include <optional>
#include <vector>

#include "smoothcolor/cayley.hpp"
#include "smoothcolor/coloring.hpp"

namespace smoothcolor {

struct GreedyStuck : std::runtime_error {
    GreedyStuck(const std::string& what) : std::runtime_error(what) {}
};

// Invariant factors d_1 | d_2 | ... | d_r, product n. n = 1 is the empty list.
using AbelianGroupType = std::vector<int>;

// One representative per isomorphism class of abelian groups of order n.
std::vector<AbelianGroupType> abelian_groups_of_order(int n);

// All distinct Cayley tables ([n], +) isomorphic to the given type that
// extend partial multiplication (a + b = ab whenever ab <= n), sorted.
// existence_only stops at the first table found.
std::vector<CayleyTable> satisfactory_groups(int n, const AbelianGroupType& type,
                                             bool existence_only = false);

// True iff no abelian group type of order n admits a satisfactory table.
bool is_groupless(int n);

enum class LinearMode { greedy, backtracking };

// Coefficients (a_1..a_pi(n)) mod n with m = prod p_i^{b_i} |-> sum a_i b_i
// injective on [n]. Greedy picks each a_i minimal and may throw GreedyStuck;
// backtracking returns the lexicographically least solution or nullopt.
std::optional<std::vector<int>> linear_coefficients(int n, LinearMode mode);

// The order p^2 - p table induced by (Z/p^2 Z)* with p | i relabeled:
// g_i = i for p not dividing i, g_{pj} = p^2 - j.
CayleyTable p2p_table(int p);

// Group-variant coloring of the table (c(i) = i on [n] by construction).
Coloring table_to_coloring(const CayleyTable& t);

// Table of the multiplicative coloring strongly represented by p = kn+1:
// entry(i,j) = canonical label of i^k j^k mod p.
CayleyTable strong_rep_to_table(u64 n, u64 k, u64 p);

}  // namespace smoothcolor
