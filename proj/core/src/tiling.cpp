#include "smoothcolor/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

namespace smoothcolor {

std::vector<ExponentVector> polyomino(u64 n) {
    SmoothContext ctx(n);
    std::vector<ExponentVector> out;
    out.reserve(n);
    for (u64 i = 1; i <= n; ++i) out.push_back(ctx.factor(i));
    return out;
}

std::vector<ExponentVector> coloring_to_translates(const Coloring& c, int class_label,
                                                   const Box& window) {
    std::vector<ExponentVector> out;
    const std::size_t total = window.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = window.at(idx);
        if (c.in_domain(v) && c.color(v) == class_label) out.push_back(v);
    }
    return out;
}

DirectSumReport check_direct_sum(const std::vector<ExponentVector>& T,
                                 const std::vector<ExponentVector>& B, const Box& window) {
    DirectSumReport rep;
    if (window.dims() == 0 || T.empty()) return rep;
    std::vector<int> margin(window.dims(), 0);
    for (const auto& tv : T)
        for (std::size_t i = 0; i < margin.size(); ++i) margin[i] = std::max(margin[i], tv[i]);
    Box interior = window;
    for (std::size_t i = 0; i < margin.size(); ++i) {
        interior.lo[i] += margin[i];
        interior.hi[i] -= margin[i];
        if (interior.lo[i] > interior.hi[i]) return rep;  // nothing to check
    }
    std::vector<int> covers(interior.size(), 0);
    for (const auto& b : B) {
        for (const auto& tv : T) {
            ExponentVector cell(b);
            for (std::size_t i = 0; i < cell.size(); ++i) cell[i] += tv[i];
            if (interior.contains(cell)) ++covers[interior.index(cell)];
        }
    }
    for (std::size_t idx = 0; idx < covers.size(); ++idx) {
        if (covers[idx] != 1) {
            rep.ok = false;
            rep.cell = interior.at(idx);
            rep.covers = covers[idx];
            return rep;
        }
    }
    return rep;
}

bool is_translation_invariant(const Coloring& c, const Box& window) {
    const auto& ctx = c.ctx();
    const int min_side = 2 * static_cast<int>(ctx.n);
    for (u64 p : ctx.primes) {
        ExponentVector tp = ctx.factor(p);
        Box sub = window;
        for (std::size_t i = 0; i < sub.dims(); ++i) {
            sub.hi[i] -= tp[i];
            if (sub.hi[i] - sub.lo[i] + 1 < min_side)
                throw WindowTooSmall("comparison sub-box for p = " + std::to_string(p) +
                                     " has side below " + std::to_string(min_side));
        }
        Coloring cp = translate(c, p, sub);
        Coloring base = canonicalize_labels(c, sub);
        if (!colorings_equal(base, cp, sub)) return false;
    }
    return true;
}

std::optional<CayleyTable> extract_cayley_if_invariant(const Coloring& c, const Box& window) {
    if (!is_translation_invariant(c, window)) return std::nullopt;
    const int n = static_cast<int>(c.n());
    CayleyTable t(n, std::vector<int>(static_cast<std::size_t>(n) * n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            t.set(a, b, c.color(static_cast<u64>(a) * static_cast<u64>(b)));
    std::string why;
    if (!t.valid(&why))
        throw std::logic_error("extracted table fails validation: " + why);
    return t;
}

LatticeReport identity_lattice(const Coloring& c, const Box& window) {
    auto points = coloring_to_translates(c, 1, window);
    const std::size_t s = window.dims();
    // Incremental Hermite-style reduction of the generated lattice: rows[i]
    // has pivot at column i with positive leading entry, or is absent.
    std::vector<std::optional<ExponentVector>> rows(s);
    auto insert = [&](ExponentVector v) {
        for (std::size_t i = 0; i < s; ++i) {
            if (v[i] == 0) continue;
            if (!rows[i]) {
                if (v[i] < 0)
                    for (auto& x : v) x = -x;
                rows[i] = v;
                return true;  // signal: rows changed
            }
            // Euclidean step on the pivot column.
            while (v[i] != 0) {
                int q = v[i] / (*rows[i])[i];
                for (std::size_t j = 0; j < s; ++j) v[j] -= q * (*rows[i])[j];
                if (v[i] != 0) std::swap(v, *rows[i]);
            }
        }
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : points)
            if (insert(p)) changed = true;
        // Re-run so later pivots reduce earlier leftovers to a fixpoint.
    }
    LatticeReport rep;
    u64 det = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (!rows[i]) {
            rep.index = 0;  // not full rank within the window
            return rep;
        }
        det *= static_cast<u64>((*rows[i])[i]);
        rep.basis.push_back(*rows[i]);
    }
    rep.index = det;
    return rep;
}

void export_csv(const Coloring& c, const Box& window, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (std::size_t i = 0; i < window.dims(); ++i) out << "alpha_" << i + 1 << ",";
    out << "label\n";
    const std::size_t total = window.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = window.at(idx);
        if (!c.in_domain(v)) continue;
        for (int e : v) out << e << ",";
        out << c.color(v) << "\n";
    }
}

namespace {

const char* kPalette[8] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                           "#66ccee", "#aa3377", "#bbbbbb", "#222255"};

void svg_plane(const Coloring& c, const Box& window, const ExponentVector& fixed,
               const std::string& path) {
    // fixed holds dims()-2 trailing coordinates; the first two axes vary.
    const int w = window.hi[0] - window.lo[0] + 1;
    const int h = window.hi[1] - window.lo[1] + 1;
    const int cellpx = 24;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << w * cellpx << "\" height=\"" << h * cellpx << "\">\n";
    for (int y = window.lo[1]; y <= window.hi[1]; ++y) {
        for (int x = window.lo[0]; x <= window.hi[0]; ++x) {
            ExponentVector v{x, y};
            v.insert(v.end(), fixed.begin(), fixed.end());
            if (!c.in_domain(v)) continue;
            int label = c.color(v);
            out << "  <rect x=\"" << (x - window.lo[0]) * cellpx << "\" y=\""
                << (window.hi[1] - y) * cellpx << "\" width=\"" << cellpx << "\" height=\""
                << cellpx << "\" fill=\"" << kPalette[(label - 1) % 8]
                << "\" stroke=\"#ffffff\"/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace

void export_svg(const Coloring& c, const Box& window, const std::string& path) {
    if (window.dims() <= 2) {
        if (window.dims() == 2) {
            svg_plane(c, window, {}, path);
        } else {
            // 1-D: render as a single row.
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open " + path);
            const int cellpx = 24;
            out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
                << (window.hi[0] - window.lo[0] + 1) * cellpx << "\" height=\"" << cellpx
                << "\">\n";
            for (int x = window.lo[0]; x <= window.hi[0]; ++x) {
                ExponentVector v{x};
                if (!c.in_domain(v)) continue;
                out << "  <rect x=\"" << (x - window.lo[0]) * cellpx
                    << "\" y=\"0\" width=\"" << cellpx << "\" height=\"" << cellpx
                    << "\" fill=\"" << kPalette[(c.color(v) - 1) % 8]
                    << "\" stroke=\"#ffffff\"/>\n";
            }
            out << "</svg>\n";
        }
        return;
    }
    // 3+ dimensions: one SVG per slice of the trailing coordinates.
    std::filesystem::create_directories(path);
    std::vector<int> lo(window.lo.begin() + 2, window.lo.end());
    std::vector<int> hi(window.hi.begin() + 2, window.hi.end());
    std::vector<int> cur = lo;
    for (;;) {
        std::string name = "slice";
        for (int v : cur) name += "_" + std::to_string(v);
        svg_plane(c, window, cur, (std::filesystem::path(path) / (name + ".svg")).string());
        std::size_t i = 0;
        while (i < cur.size()) {
            if (++cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            ++i;
        }
        if (i == cur.size()) break;
    }
}

}  // namespace smoothcolor
