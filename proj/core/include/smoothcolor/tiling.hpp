#pragma once

// The coloring <-> tiling dictionary on finite windows: the polyomino of
// base exponent vectors, direct-sum checking of translate sets,
// translation-invariance testing, Cayley-table extraction from invariant
// colorings, the identity-class lattice, and CSV/SVG export.

#include <optional>
#include <string>
#include <vector>

#include "smoothcolor/cayley.hpp"
#include "smoothcolor/coloring.hpp"

namespace smoothcolor {

struct WindowTooSmall : std::runtime_error {
    WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// T_n = {t(i) : i in [n]}.
std::vector<ExponentVector> polyomino(u64 n);

// The t-images of one color class inside the window.
std::vector<ExponentVector> coloring_to_translates(const Coloring& c, int class_label,
                                                   const Box& window);

struct DirectSumReport {
    bool ok = true;
    std::optional<ExponentVector> cell;  // a doubly- or un-covered cell
    int covers = 1;                      // its cover count
};

// Every interior cell of the window (margin: the per-axis extent of T) must
// be covered by exactly one b + t(i) with b in B.
DirectSumReport check_direct_sum(const std::vector<ExponentVector>& T,
                                 const std::vector<ExponentVector>& B, const Box& window);

// True iff translate(c, p) equals c as a partition for every prime p <= n,
// compared on the window shrunk by t(p); each shrunk box must keep side
// >= 2n (else WindowTooSmall).
bool is_translation_invariant(const Coloring& c, const Box& window);

// If translation invariant, the table entry(i,j) = c(i*j); validated before
// return. Otherwise nullopt.
std::optional<CayleyTable> extract_cayley_if_invariant(const Coloring& c, const Box& window);

struct LatticeReport {
    std::vector<ExponentVector> basis;  // row basis, Hermite-reduced
    u64 index = 0;                      // |Z^s : Lambda| = |det basis|
};

// Lattice generated by the t-images of the class of 1 within the window.
LatticeReport identity_lattice(const Coloring& c, const Box& window);

// CSV rows "alpha_1,...,alpha_s,label" for all in-domain window cells.
void export_csv(const Coloring& c, const Box& window, const std::string& path);

// SVG unit-square rendering. For more than two dimensions, one file per
// 2-D slice is written under `path` (treated as a directory).
void export_svg(const Coloring& c, const Box& window, const std::string& path);

}  // namespace smoothcolor
