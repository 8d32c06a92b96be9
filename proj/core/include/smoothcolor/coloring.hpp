#pragma once

// Uniform representation and evaluation of satisfactory colorings,
// verification on finite ranges/windows, translation, relabeling, equality,
// Hasse-automorphism relabeling, closed forms for n <= 5, and extension to
// the positive integers.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <variant>
#include <vector>

#include "smoothcolor/cayley.hpp"
#include "smoothcolor/smooth.hpp"

namespace smoothcolor {

struct OutOfDomain : std::runtime_error {
    OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};
struct LabelsNotDistinctOnBase : std::runtime_error {
    LabelsNotDistinctOnBase(const std::string& what) : std::runtime_error(what) {}
};
struct PrefixTooShort : std::runtime_error {
    PrefixTooShort(const std::string& what) : std::runtime_error(what) {}
};
struct NotAnAutomorphism : std::runtime_error {
    NotAnAutomorphism(const std::string& what) : std::runtime_error(what) {}
};

// An axis-aligned box of exponent vectors, bounds inclusive (entries may be
// negative). Used as the domain of explicit-window colorings and as the
// comparison window for partition equality.
struct Box {
    std::vector<int> lo, hi;

    Box() = default;
    Box(std::vector<int> lo_, std::vector<int> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {}
    static Box cube(std::size_t dims, int lo, int hi);

    std::size_t dims() const { return lo.size(); }
    std::size_t size() const;
    bool contains(const ExponentVector& v) const;
    std::size_t index(const ExponentVector& v) const;  // row-major
    ExponentVector at(std::size_t idx) const;
};

// The five coloring representations.
struct LinearColoring {
    std::vector<int> coeffs;  // one residue mod n per prime
};
struct PowerResidueColoring {
    u64 k = 1, p = 2;  // p = k*n + 1 prime; c(m) = m^k mod p
};
struct GroupColoring {
    CayleyTable table;  // c(prod p_i^{a_i}) = (+)-combination of table powers
};
struct WindowColoring {
    Box window;
    std::vector<long long> labels;  // indexed by window.index()
};
struct StripColoring {
    int n = 6;                // 6 or 8
    std::vector<int> prefix;  // seed types x(1), x(2), ... over [3] resp. [4]
};

class Coloring {
  public:
    using Variant = std::variant<LinearColoring, PowerResidueColoring, GroupColoring,
                                 WindowColoring, StripColoring>;

    Coloring(SmoothContext ctx, Variant v) : ctx_(std::move(ctx)), v_(std::move(v)) {}

    const SmoothContext& ctx() const { return ctx_; }
    const Variant& variant() const { return v_; }
    u64 n() const { return ctx_.n; }

    // Raw label of an exponent vector / smooth number. For PowerResidue the
    // raw labels are residues mod p; elsewhere they already lie in [0,n) or
    // [1,n]. Distinctness questions only ever compare raw labels.
    long long raw(const ExponentVector& v) const;
    long long raw(u64 m) const { return raw(ctx_.factor(m)); }

    // True iff v is inside the coloring's domain (always true except for
    // window colorings and strip colorings with a too-short prefix).
    bool in_domain(const ExponentVector& v) const;

    // Canonical label in [n] under the convention c(i) = i for i in [n].
    // Throws LabelsNotDistinctOnBase if the raw labels of 1..n collide.
    int color(const ExponentVector& v) const;
    int color(u64 m) const { return color(ctx_.factor(m)); }

  private:
    SmoothContext ctx_;
    Variant v_;
    mutable std::map<long long, int> canon_;  // raw label -> canonical, lazily built
    const std::map<long long, int>& canon_map() const;
};

struct VerificationReport {
    bool ok = true;
    // (a, i, j) with i < j <= n and color(i*a) = color(j*a).
    std::optional<std::tuple<u64, int, int>> violation;
    u64 checked_count = 0;  // number of (a; 1..n) tuples examined
};

// Check every smooth a with n*a <= bound whose tuple lies in c's domain.
VerificationReport verify_satisfactory(const Coloring& c, u64 bound);

// Window form: every base point v in box such that all cells v + t(i),
// i in [n], lie in the box and in c's domain must see n distinct labels.
// The reported violation uses a = reconstruct(v) when v is nonnegative, 0
// otherwise.
VerificationReport verify_on_window(const Coloring& c, const Box& box);

// Partition-preserving relabel with label(i) = i for i in [n], materialized
// on the given window.
Coloring canonicalize_labels(const Coloring& c, const Box& window);

// The translated coloring c_k on the window (c_k(l) = c_k(m) iff c(kl) = c(km)),
// canonically labeled.
Coloring translate(const Coloring& c, u64 k, const Box& window);

// True iff the canonical forms agree at every point of the window that lies
// in both domains.
bool colorings_equal(const Coloring& a, const Coloring& b, const Box& window);

// Default comparison window: the exponent box of side `side` (0-based) in
// pi(n) coordinates.
Box default_window(const SmoothContext& ctx, int side = 8);

// All permutations of [n] preserving divisibility in both directions
// (automorphisms of ([n],|)); each fixes 1. perm[i-1] = rho(i).
std::vector<std::vector<int>> hasse_automorphisms(u64 n);

// Relabel c through a Hasse automorphism rho, extended multiplicatively to
// K_n (atoms map to atoms, so rho permutes the prime axes).
Coloring apply_automorphism(const Coloring& c, const std::vector<int>& rho, const Box& window);

// The complete list of satisfactory colorings of K_n for n <= 5 (closed
// forms): 1, 1, 1, 1, 2 colorings as Linear variants.
std::vector<Coloring> small_n_colorings(u64 n);

// Independent brute-force enumeration of all satisfactory colorings on the
// exponent box [0,side)^pi(n), with labels pinned to c(i)=i on [n]. Used as
// the completeness oracle for small n.
std::vector<Coloring> enumerate_box_colorings(const SmoothContext& ctx, int side);

// Extend a coloring of K_n to [1..M]: every m factors uniquely as a*k with
// a n-rough and k n-smooth, and gets color perm_a(core(k)). The chooser maps
// each rough a to its permutation of [n] (identity for a = 1).
std::vector<int> extend_to_positive_integers(
    const Coloring& core, const std::function<std::vector<int>(u64)>& chooser, u64 M);

}  // namespace smoothcolor
