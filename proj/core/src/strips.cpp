#include "smoothcolor/strips.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace smoothcolor {

namespace {

int imod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// Seed type of the strip column: seed(0) = 1, seed(2m) = prefix[m-1].
int seed_at(const StripColoring& s, int arg) {
    if (arg < 0 || arg % 2 != 0)
        throw OutOfDomain("strip seed index must be a nonnegative even number");
    if (arg == 0) return 1;
    std::size_t m = static_cast<std::size_t>(arg / 2);
    if (m > s.prefix.size())
        throw PrefixTooShort("strip prefix has " + std::to_string(s.prefix.size()) +
                             " entries but seed index " + std::to_string(arg) + " is needed");
    return s.prefix[m - 1];
}

constexpr std::array<int, 3> kBottom6 = {1, 2, 4};
constexpr std::array<int, 3> kTop6 = {3, 6, 5};
constexpr std::array<int, 4> kBottom8 = {1, 2, 4, 8};
constexpr std::array<int, 4> kTop8 = {3, 6, 5, 7};

}  // namespace

int strip_type(const StripColoring& s, int k, int gamma, int delta) {
    if (s.n == 6) {
        // Propagation rule: type j at level (k, gamma) becomes j+1 (mod 3)
        // at (k-1, gamma+1); the seed fixes the gamma = 0 column.
        return imod(seed_at(s, k + gamma) - 1 + gamma, 3) + 1;
    }
    // n = 8: moving one step in the 5-direction advances the type by 2 and
    // one step in the 7-direction by 3 (mod 4).
    return imod(seed_at(s, k + gamma + delta) - 1 + 2 * gamma + 3 * delta, 4) + 1;
}

int strip_value(const StripColoring& s, const ExponentVector& v) {
    if (s.n == 6) {
        if (v.size() != 3) throw OutOfDomain("expected a 3-coordinate exponent vector");
        const int alpha = v[0], beta = v[1], gamma = v[2];
        if (beta < 0 || gamma < 0)
            throw OutOfDomain("strip colorings require nonnegative 3- and 5-exponents");
        // Rows come in height-two strips; k is the bottom row of the strip
        // containing beta (k = -1 when beta = 0 sits on top of a clipped strip).
        const int k = ((beta + gamma) % 2 == 0) ? beta : beta - 1;
        const int type = strip_type(s, k, gamma);
        static constexpr std::array<int, 3> shift = {0, 2, 1};
        const int idx = imod(alpha + shift[type - 1], 3);
        return beta == k ? kBottom6[idx] : kTop6[idx];
    }
    if (s.n == 8) {
        if (v.size() != 4) throw OutOfDomain("expected a 4-coordinate exponent vector");
        const int alpha = v[0], beta = v[1], gamma = v[2], delta = v[3];
        if (beta < 0 || gamma < 0 || delta < 0)
            throw OutOfDomain("strip colorings require nonnegative 3-, 5- and 7-exponents");
        const int k = ((beta + gamma + delta) % 2 == 0) ? beta : beta - 1;
        const int type = strip_type(s, k, gamma, delta);
        const int idx = imod(alpha - (1 - type), 4);
        return beta == k ? kBottom8[idx] : kTop8[idx];
    }
    throw OutOfDomain("strip families exist only for n = 6 and n = 8");
}

Coloring strip_coloring(int n, const std::vector<int>& prefix, int side) {
    if (n != 6 && n != 8)
        throw std::invalid_argument("strip families exist only for n = 6 and n = 8");
    const int types = n == 6 ? 3 : 4;
    for (int x : prefix)
        if (x < 1 || x > types)
            throw std::invalid_argument("strip type out of range");
    // Largest seed index reachable in [0, side)^dims.
    const int max_arg = n == 6 ? 2 * (side - 1) : 3 * (side - 1);
    const std::size_t needed = static_cast<std::size_t>(max_arg / 2);
    if (prefix.size() < needed)
        throw PrefixTooShort("side-" + std::to_string(side) + " window needs " +
                             std::to_string(needed) + " seed entries, got " +
                             std::to_string(prefix.size()));
    SmoothContext ctx(static_cast<u64>(n));
    StripColoring sc{n, prefix};
    WindowColoring w;
    w.window = Box::cube(ctx.pi_n(), 0, side - 1);
    w.labels.assign(w.window.size(), -1);
    for (std::size_t idx = 0; idx < w.labels.size(); ++idx)
        w.labels[idx] = strip_value(sc, w.window.at(idx));
    return Coloring(std::move(ctx), std::move(w));
}

StripInvariantReport strip_invariants_check(const Coloring& d, const Box& window) {
    StripInvariantReport rep;
    const u64 n = d.n();
    // Pairs of exponent offsets (o1, o2) with d(m * o1) = d(m * o2) claimed.
    std::vector<std::pair<ExponentVector, ExponentVector>> identities;
    if (n == 6) {
        identities.push_back({{3, 0, 0}, {0, 0, 0}});  // d(8m) = d(m)
    } else if (n == 8) {
        identities.push_back({{4, 0, 0, 0}, {0, 0, 0, 0}});  // d(16m) = d(m)
        identities.push_back({{0, 0, 1, 0}, {2, 1, 0, 0}});  // d(5m) = d(12m)
        identities.push_back({{0, 0, 0, 1}, {3, 1, 0, 0}});  // d(7m) = d(24m)
    } else {
        rep.ok = false;
        rep.failures.push_back("no strip identities are defined for n = " + std::to_string(n));
        return rep;
    }
    const std::size_t total = window.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = window.at(idx);
        for (const auto& [o1, o2] : identities) {
            ExponentVector a(v), b(v);
            for (std::size_t i = 0; i < v.size(); ++i) {
                a[i] += o1[i];
                b[i] += o2[i];
            }
            if (!window.contains(a) || !window.contains(b)) continue;
            if (!d.in_domain(a) || !d.in_domain(b)) continue;
            ++rep.checked;
            int ca = d.color(a), cb = d.color(b);
            if (ca != cb) {
                rep.ok = false;
                std::string at = "(";
                for (std::size_t i = 0; i < v.size(); ++i)
                    at += (i ? "," : "") + std::to_string(v[i]);
                at += ")";
                rep.failures.push_back("identity fails at " + at + ": " + std::to_string(ca) +
                                       " != " + std::to_string(cb));
            }
        }
    }
    return rep;
}

std::vector<Coloring> extensions_div5(int side) {
    if (side < 3) throw std::invalid_argument("window side must be at least 3");
    SmoothContext ctx(6);
    // Domain: exponent vectors (alpha, beta, gamma) with gamma >= -1.
    Box box({0, 0, -1}, {side - 1, side - 1, side - 2});

    // Everything except the row (beta = 0, gamma = -1) is forced by
    // d_5 = c: label = 3^(2*alpha + beta + 5*gamma mod 6) mod 7.
    auto forced = [](int alpha, int beta, int gamma) {
        int e = ((2 * alpha + beta + 5 * gamma) % 6 + 6) % 6;
        int r = 1;
        for (int i = 0; i < e; ++i) r = r * 3 % 7;
        return r;
    };
    std::vector<long long> labels(box.size(), -1);
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
        ExponentVector v = box.at(idx);
        if (v[1] == 0 && v[2] == -1) continue;  // the undetermined row
        labels[idx] = forced(v[0], v[1], v[2]);
    }

    // Backtrack over the undetermined row. The only constraints binding it
    // are the translate cliques {a, 2a, 3a, 4a, 5a, 6a} based on that row.
    const std::vector<ExponentVector> t6 = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                            {2, 0, 0}, {0, 0, 1}, {1, 1, 0}};
    std::vector<int> row(static_cast<std::size_t>(side), 0);
    std::vector<Coloring> found;
    auto row_idx = [&](int alpha) { return box.index({alpha, 0, -1}); };
    auto consistent = [&](int alpha) {
        // Check every clique based at (a, 0, -1) whose cells are all placed.
        for (int a = std::max(0, alpha - 2); a + 2 < side && a <= alpha; ++a) {
            std::array<int, 6> seen{};
            int count = 0;
            for (const auto& o : t6) {
                ExponentVector cell = {a + o[0], o[1], -1 + o[2]};
                long long l = cell[1] == 0 && cell[2] == -1
                                  ? (cell[0] <= alpha ? row[cell[0]] : 0)
                                  : labels[box.index(cell)];
                if (l == 0) { count = -1; break; }  // clique not fully placed yet
                seen[count++] = static_cast<int>(l);
            }
            if (count < 0) continue;
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int alpha) -> void {
        if (alpha == side) {
            std::vector<long long> full(labels);
            for (int a = 0; a < side; ++a) full[row_idx(a)] = row[a];
            WindowColoring w;
            w.window = box;
            w.labels = std::move(full);
            found.emplace_back(ctx, std::move(w));
            return;
        }
        for (int l = 1; l <= 6; ++l) {
            row[alpha] = l;
            if (consistent(alpha)) self(self, alpha + 1);
        }
        row[alpha] = 0;
    };
    rec(rec, 0);
    return found;
}

}  // namespace smoothcolor
