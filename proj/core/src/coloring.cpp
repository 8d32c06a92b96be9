#include "smoothcolor/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "smoothcolor/strips.hpp"

namespace smoothcolor {

namespace {

long long imod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// t(i): exponent vectors of 1..n, precomputed per context.
std::vector<ExponentVector> base_vectors(const SmoothContext& ctx) {
    std::vector<ExponentVector> t;
    t.reserve(ctx.n);
    for (u64 i = 1; i <= ctx.n; ++i) t.push_back(ctx.factor(i));
    return t;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

Box Box::cube(std::size_t dims, int lo, int hi) {
    return Box(std::vector<int>(dims, lo), std::vector<int>(dims, hi));
}

std::size_t Box::size() const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) s *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    return s;
}

bool Box::contains(const ExponentVector& v) const {
    if (v.size() != lo.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < lo[i] || v[i] > hi[i]) return false;
    return true;
}

std::size_t Box::index(const ExponentVector& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(v[i] - lo[i]);
    return idx;
}

ExponentVector Box::at(std::size_t idx) const {
    ExponentVector v(lo.size());
    for (std::size_t i = lo.size(); i-- > 0;) {
        std::size_t w = static_cast<std::size_t>(hi[i] - lo[i] + 1);
        v[i] = lo[i] + static_cast<int>(idx % w);
        idx /= w;
    }
    return v;
}

long long Coloring::raw(const ExponentVector& v) const {
    if (v.size() != ctx_.pi_n())
        throw OutOfDomain("exponent vector has wrong dimension");
    if (const auto* lin = std::get_if<LinearColoring>(&v_)) {
        long long acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            acc += static_cast<long long>(lin->coeffs[i]) * v[i];
        return imod(acc, static_cast<long long>(ctx_.n));
    }
    if (const auto* pr = std::get_if<PowerResidueColoring>(&v_)) {
        const u64 p = pr->p;
        u64 r = 1 % p;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            // Exponents reduce mod p-1 (p prime, p_i nonzero mod p), which
            // also handles negative coordinates.
            long long e = static_cast<long long>(
                (static_cast<__int128>(pr->k) * v[i]) % static_cast<long long>(p - 1));
            r = mulmod(r, powmod(ctx_.primes[i] % p, static_cast<u64>(imod(e, p - 1)), p), p);
        }
        return static_cast<long long>(r);
    }
    if (const auto* g = std::get_if<GroupColoring>(&v_)) {
        int acc = 1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                acc = g->table.op(acc, g->table.power(static_cast<int>(ctx_.primes[i]), v[i]));
        return acc;
    }
    if (const auto* w = std::get_if<WindowColoring>(&v_)) {
        if (!w->window.contains(v)) throw OutOfDomain("point outside window");
        long long l = w->labels[w->window.index(v)];
        if (l < 0) throw OutOfDomain("point unset in window");
        return l;
    }
    const auto& s = std::get<StripColoring>(v_);
    return strip_value(s, v);
}

bool Coloring::in_domain(const ExponentVector& v) const {
    if (v.size() != ctx_.pi_n()) return false;
    if (const auto* w = std::get_if<WindowColoring>(&v_))
        return w->window.contains(v) && w->labels[w->window.index(v)] >= 0;
    if (std::holds_alternative<StripColoring>(v_)) {
        try {
            (void)raw(v);
        } catch (const std::runtime_error&) {
            return false;
        }
        return true;
    }
    return true;
}

const std::map<long long, int>& Coloring::canon_map() const {
    if (canon_.empty()) {
        std::map<long long, int> m;
        for (u64 i = 1; i <= ctx_.n; ++i) {
            long long l = raw(i);
            if (!m.emplace(l, static_cast<int>(i)).second)
                throw LabelsNotDistinctOnBase("labels of 1.." + std::to_string(ctx_.n) +
                                              " are not pairwise distinct");
        }
        canon_ = std::move(m);
    }
    return canon_;
}

int Coloring::color(const ExponentVector& v) const {
    const auto& m = canon_map();
    auto it = m.find(raw(v));
    if (it == m.end())
        throw OutOfDomain("raw label does not occur on [n]");
    return it->second;
}

VerificationReport verify_satisfactory(const Coloring& c, u64 bound) {
    VerificationReport rep;
    const auto& ctx = c.ctx();
    if (bound < ctx.n) return rep;
    auto t = base_vectors(ctx);
    std::vector<long long> labels(ctx.n);
    for (u64 a : ctx.enumerate(bound / ctx.n)) {
        ExponentVector va = ctx.factor(a);
        bool inside = true;
        for (u64 i = 0; i < ctx.n && inside; ++i) {
            ExponentVector cell = add(va, t[i]);
            if (!c.in_domain(cell)) { inside = false; break; }
            labels[i] = c.raw(cell);
        }
        if (!inside) continue;
        ++rep.checked_count;
        for (u64 j = 1; j < ctx.n; ++j)
            for (u64 i = 0; i < j; ++i)
                if (labels[i] == labels[j]) {
                    rep.ok = false;
                    rep.violation = {a, static_cast<int>(i + 1), static_cast<int>(j + 1)};
                    return rep;
                }
    }
    return rep;
}

VerificationReport verify_on_window(const Coloring& c, const Box& box) {
    VerificationReport rep;
    const auto& ctx = c.ctx();
    auto t = base_vectors(ctx);
    std::vector<long long> labels(ctx.n);
    const std::size_t total = box.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = box.at(idx);
        bool inside = true;
        for (u64 i = 0; i < ctx.n && inside; ++i) {
            ExponentVector cell = add(v, t[i]);
            if (!box.contains(cell) || !c.in_domain(cell)) inside = false;
            else labels[i] = c.raw(cell);
        }
        if (!inside) continue;
        ++rep.checked_count;
        for (u64 j = 1; j < ctx.n; ++j)
            for (u64 i = 0; i < j; ++i)
                if (labels[i] == labels[j]) {
                    rep.ok = false;
                    bool nonneg = std::all_of(v.begin(), v.end(), [](int e) { return e >= 0; });
                    rep.violation = {nonneg ? ctx.reconstruct(v) : 0,
                                     static_cast<int>(i + 1), static_cast<int>(j + 1)};
                    return rep;
                }
    }
    return rep;
}

Coloring canonicalize_labels(const Coloring& c, const Box& window) {
    WindowColoring w;
    w.window = window;
    w.labels.assign(window.size(), -1);
    for (std::size_t idx = 0; idx < w.labels.size(); ++idx) {
        ExponentVector v = window.at(idx);
        if (c.in_domain(v)) w.labels[idx] = c.color(v);
    }
    return Coloring(c.ctx(), std::move(w));
}

Coloring translate(const Coloring& c, u64 k, const Box& window) {
    const auto& ctx = c.ctx();
    ExponentVector tk = ctx.factor(k);
    WindowColoring w;
    w.window = window;
    w.labels.assign(window.size(), -1);
    for (std::size_t idx = 0; idx < w.labels.size(); ++idx) {
        ExponentVector v = add(window.at(idx), tk);
        if (c.in_domain(v)) w.labels[idx] = c.raw(v);
    }
    Coloring shifted(ctx, std::move(w));
    return canonicalize_labels(shifted, window);  // relabel so c_k(i) = i
}

bool colorings_equal(const Coloring& a, const Coloring& b, const Box& window) {
    const std::size_t total = window.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = window.at(idx);
        bool da = a.in_domain(v), db = b.in_domain(v);
        if (da != db) return false;
        if (da && a.color(v) != b.color(v)) return false;
    }
    return true;
}

Box default_window(const SmoothContext& ctx, int side) {
    return Box::cube(ctx.pi_n(), 0, side - 1);
}

std::vector<std::vector<int>> hasse_automorphisms(u64 n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rho(n, 0);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, u64 a) -> void {
        if (a > n) {
            out.push_back(rho);
            return;
        }
        for (u64 v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (u64 b = 1; b < a && ok; ++b) {
                u64 w = static_cast<u64>(rho[b - 1]);
                if ((a % b == 0) != (v % w == 0)) ok = false;
                if ((b % a == 0) != (w % v == 0)) ok = false;
            }
            if (!ok) continue;
            rho[a - 1] = static_cast<int>(v);
            used[v] = true;
            self(self, a + 1);
            used[v] = false;
        }
    };
    if (n >= 1) rec(rec, 1);
    return out;
}

Coloring apply_automorphism(const Coloring& c, const std::vector<int>& rho, const Box& window) {
    const auto& ctx = c.ctx();
    if (rho.size() != ctx.n) throw NotAnAutomorphism("permutation has wrong size");
    for (u64 a = 1; a <= ctx.n; ++a)
        for (u64 b = 1; b <= ctx.n; ++b)
            if ((a % b == 0) != (static_cast<u64>(rho[a - 1]) % static_cast<u64>(rho[b - 1]) == 0))
                throw NotAnAutomorphism("permutation does not preserve divisibility");
    // An automorphism of ([n],|) maps atoms (primes) to atoms, so it induces
    // a permutation of the prime axes.
    std::vector<std::size_t> axis(ctx.pi_n());
    for (std::size_t i = 0; i < ctx.pi_n(); ++i) {
        u64 q = static_cast<u64>(rho[ctx.primes[i] - 1]);
        auto it = std::find(ctx.primes.begin(), ctx.primes.end(), q);
        if (it == ctx.primes.end()) throw NotAnAutomorphism("image of a prime is not prime");
        axis[i] = static_cast<std::size_t>(it - ctx.primes.begin());
    }
    WindowColoring w;
    w.window = window;
    w.labels.assign(window.size(), -1);
    for (std::size_t idx = 0; idx < w.labels.size(); ++idx) {
        ExponentVector v = window.at(idx);
        ExponentVector u(v.size(), 0);  // t(rho(m)): coordinate i contributes on axis[i]
        for (std::size_t i = 0; i < v.size(); ++i) u[axis[i]] += v[i];
        if (c.in_domain(u)) w.labels[idx] = c.raw(u);
    }
    Coloring tilde(ctx, std::move(w));
    return canonicalize_labels(tilde, window);
}

std::vector<Coloring> small_n_colorings(u64 n) {
    auto lin = [&](std::vector<int> coeffs) {
        return Coloring(SmoothContext(n), LinearColoring{std::move(coeffs)});
    };
    switch (n) {
        case 1: return {lin({})};
        case 2: return {lin({1})};
        case 3: return {lin({1, 2})};
        case 4: return {lin({1, 3})};
        case 5: return {lin({1, 4, 3}), lin({1, 3, 4})};
        default:
            throw std::invalid_argument("closed forms are only available for n <= 5");
    }
}

std::vector<Coloring> enumerate_box_colorings(const SmoothContext& ctx, int side) {
    const Box box = Box::cube(ctx.pi_n(), 0, side - 1);
    const std::size_t total = box.size();
    auto t = base_vectors(ctx);
    const int n = static_cast<int>(ctx.n);

    // Cliques: {v + t(i) : i in [n]} for every base v fully inside the box.
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::vector<std::size_t>> cliques_of(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        ExponentVector v = box.at(idx);
        std::vector<std::size_t> clique;
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) {
            ExponentVector cell = add(v, t[i]);
            if (!box.contains(cell)) inside = false;
            else clique.push_back(box.index(cell));
        }
        if (!inside) continue;
        for (std::size_t c : clique) cliques_of[c].push_back(cliques.size());
        cliques.push_back(std::move(clique));
    }

    // Pin c(i) = i on [n] (each partition then has exactly one labeling),
    // then backtrack over the remaining cells nearest-origin first.
    std::vector<int> labels(total, 0);
    for (int i = 1; i <= n; ++i) labels[box.index(t[i - 1])] = i;
    std::vector<std::size_t> order;
    for (std::size_t idx = 0; idx < total; ++idx)
        if (labels[idx] == 0) order.push_back(idx);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        ExponentVector va = box.at(a), vb = box.at(b);
        int sa = std::accumulate(va.begin(), va.end(), 0);
        int sb = std::accumulate(vb.begin(), vb.end(), 0);
        return std::tie(sa, a) < std::tie(sb, b);
    });

    auto consistent = [&](std::size_t cell) {
        for (std::size_t ci : cliques_of[cell])
            for (std::size_t other : cliques[ci])
                if (other != cell && labels[other] != 0 && labels[other] == labels[cell])
                    return false;
        return true;
    };
    for (int i = 1; i <= n; ++i)
        if (!consistent(box.index(t[i - 1])))
            return {};  // the pinned base is already contradictory (never for real n)

    std::vector<Coloring> found;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            WindowColoring w;
            w.window = box;
            w.labels.assign(labels.begin(), labels.end());
            found.emplace_back(ctx, std::move(w));
            return;
        }
        std::size_t cell = order[pos];
        for (int l = 1; l <= n; ++l) {
            labels[cell] = l;
            if (consistent(cell)) self(self, pos + 1);
        }
        labels[cell] = 0;
    };
    rec(rec, 0);
    return found;
}

std::vector<int> extend_to_positive_integers(
    const Coloring& core, const std::function<std::vector<int>(u64)>& chooser, u64 M) {
    const auto& ctx = core.ctx();
    // 1-based: colors[m] is the color of m, index 0 is unused.
    std::vector<int> colors(M + 1, 0);
    for (u64 m = 1; m <= M; ++m) {
        u64 smooth = 1, rough = m;
        for (u64 p : ctx.primes)
            while (rough % p == 0) { rough /= p; smooth *= p; }
        std::vector<int> perm = chooser(rough);
        colors[m] = perm[static_cast<std::size_t>(core.color(smooth)) - 1];
    }
    return colors;
}

}  // namespace smoothcolor
