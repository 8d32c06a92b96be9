#include "smoothcolor/groups.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "smoothcolor/strong_reps.hpp"

namespace smoothcolor {

// ---------------------------------------------------------------------------
// CayleyTable

int CayleyTable::inverse(int a) const {
    for (int b = 1; b <= n; ++b)
        if (op(a, b) == 1) return b;
    throw std::logic_error("table row has no inverse");
}

int CayleyTable::order_of(int a) const {
    int x = a, o = 1;
    while (x != 1) {
        x = op(x, a);
        ++o;
        if (o > n) throw std::logic_error("element order exceeds group order");
    }
    return o;
}

int CayleyTable::power(int a, long long e) const {
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    int r = 1;
    long long o = order_of(a);
    e %= o;
    for (long long i = 0; i < e; ++i) r = op(r, a);
    return r;
}

bool CayleyTable::valid(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (n <= 0 || cells.size() != static_cast<std::size_t>(n) * n)
        return fail("wrong cell count");
    for (int a = 1; a <= n; ++a) {
        std::vector<bool> row(n + 1, false), col(n + 1, false);
        for (int b = 1; b <= n; ++b) {
            int r = op(a, b), c = op(b, a);
            if (r < 1 || r > n || c < 1 || c > n) return fail("entry out of range");
            if (row[r]) return fail("repeated entry in a row");
            if (col[c]) return fail("repeated entry in a column");
            row[r] = col[c] = true;
            if (r != c) return fail("not commutative");
        }
        if (op(1, a) != a) return fail("1 is not the identity");
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b; c <= n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return fail("not associative");
    for (int a = 1; a <= n; ++a)
        for (int b = a; b * a <= n; ++b)
            if (op(a, b) != a * b) return fail("does not extend partial multiplication");
    return true;
}

std::vector<int> CayleyTable::invariant_factors() const {
    // Per prime q | n: m_j = #{x : x^(q^j) = 1} = q^(s_j); the increments
    // s_j - s_{j-1} count cyclic factors of exponent >= j.
    std::vector<std::pair<int, std::vector<int>>> per_prime;  // (q, descending exponents)
    for (const auto& [qq, e] : factor_u64(static_cast<u64>(n))) {
        int q = static_cast<int>(qq);
        std::vector<int> s;  // s_j, j = 0..e
        for (int j = 0; j <= e; ++j) {
            long long qj = 1;
            for (int i = 0; i < j; ++i) qj *= q;
            int count = 0;
            for (int x = 1; x <= n; ++x)
                if (power(x, qj) == 1) ++count;
            int log = 0;
            while (count > 1) { count /= q; ++log; }
            s.push_back(log);
        }
        std::vector<int> exps;  // exponent of each cyclic q-factor, descending
        for (int j = 1; j <= e; ++j) {
            int atleast_j = s[j] - s[j - 1];
            int atleast_j1 = j < e ? s[j + 1] - s[j] : 0;
            for (int i = 0; i < atleast_j - atleast_j1; ++i) exps.push_back(j);
        }
        std::sort(exps.rbegin(), exps.rend());
        per_prime.push_back({q, exps});
    }
    std::size_t r = 0;
    for (const auto& [q, exps] : per_prime) r = std::max(r, exps.size());
    std::vector<int> d(r, 1);  // d[0] largest
    for (const auto& [q, exps] : per_prime)
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int j = 0; j < exps[i]; ++j) d[i] *= q;
    std::reverse(d.begin(), d.end());  // ascending chain d_1 | d_2 | ...
    return d;
}

// ---------------------------------------------------------------------------
// Group type enumeration

namespace {

std::vector<std::vector<int>> partitions(int e) {
    // All partitions of e, parts descending.
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

}  // namespace

std::vector<AbelianGroupType> abelian_groups_of_order(int n) {
    std::vector<AbelianGroupType> out{{}};
    if (n == 1) return out;
    out.clear();
    std::vector<std::pair<int, std::vector<std::vector<int>>>> by_prime;
    for (const auto& [q, e] : factor_u64(static_cast<u64>(n)))
        by_prime.push_back({static_cast<int>(q), partitions(e)});
    std::vector<std::size_t> pick(by_prime.size(), 0);
    for (;;) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < by_prime.size(); ++i)
            r = std::max(r, by_prime[i].second[pick[i]].size());
        AbelianGroupType d(r, 1);
        for (std::size_t i = 0; i < by_prime.size(); ++i) {
            const auto& exps = by_prime[i].second[pick[i]];  // descending
            for (std::size_t j = 0; j < exps.size(); ++j)
                for (int t = 0; t < exps[j]; ++t) d[j] *= by_prime[i].first;
        }
        std::reverse(d.begin(), d.end());
        out.push_back(d);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == by_prime[i].second.size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Satisfactory-group search

namespace {

struct SearchContext {
    int n;
    std::vector<std::vector<int>> add;       // group addition on element indices
    std::vector<int> cprimes;                // constrained primes (<= n/2), ascending
    std::size_t core_count = 0;              // prefix of cprimes with p^2 <= n
    std::vector<int> band;                   // per cprime: floor(n / p)
    std::vector<int> neg;                    // additive inverse of each element
    std::vector<int> fprimes;                // free primes (> n/2)
    std::vector<std::vector<std::pair<int, int>>> buckets;  // per cprime index i:
                                             // composites (m, m / cprimes[i])
                                             // whose value is determined there
    std::vector<std::vector<std::pair<int, int>>> factors;  // m -> (cprime idx, exponent)
    std::vector<int> max_cpidx;              // m -> largest cprime index in its
                                             // factorization, or INT_MAX if m has
                                             // a prime factor outside cprimes
    std::vector<char> orbit_rep;             // v is minimal in its orbit under
                                             // multiplication-by-unit automorphisms
    std::vector<std::vector<int>> wildcards; // [j][next] = #cells of prime j's
                                             // bucket shape still unknown when
                                             // primes < next are assigned
};

SearchContext make_search_context(int n, const AbelianGroupType& type) {
    SearchContext sc;
    sc.n = n;
    // Element indices are mixed-radix tuples over the invariant factors.
    sc.add.assign(n, std::vector<int>(n));
    std::vector<int> radix(type.begin(), type.end());
    auto decode = [&](int idx) {
        std::vector<int> t(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            t[i] = idx % radix[i];
            idx /= radix[i];
        }
        return t;
    };
    for (int a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (int b = 0; b < n; ++b) {
            auto tb = decode(b);
            int idx = 0, mult = 1;
            for (std::size_t i = 0; i < radix.size(); ++i) {
                idx += ((ta[i] + tb[i]) % radix[i]) * mult;
                mult *= radix[i];
            }
            sc.add[a][b] = idx;
        }
    }
    for (u64 q : primes_upto(static_cast<u64>(n))) {
        int p = static_cast<int>(q);
        if (2 * p <= n) sc.cprimes.push_back(p);
        else sc.fprimes.push_back(p);
    }
    // A prime p with p^2 > n only constrains the images of mp for m <= n/p,
    // and every factor of such m is below sqrt(n). So once the "core" primes
    // (p^2 <= n) are placed, each remaining constrained prime just needs a
    // free translate of the fixed shape {h(m) : m <= n/p}: an exact-cover
    // problem handled in leaf_core() instead of by branching.
    sc.core_count = 0;
    for (std::size_t i = 0; i < sc.cprimes.size(); ++i)
        if (sc.cprimes[i] * sc.cprimes[i] <= n) sc.core_count = i + 1;
    for (int p : sc.cprimes) sc.band.push_back(n / p);
    sc.neg.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (sc.add[a][b] == 0) { sc.neg[a] = b; break; }
    sc.factors.assign(n + 1, {});
    sc.buckets.assign(sc.cprimes.size(), {});
    sc.max_cpidx.assign(n + 1, 0);
    sc.max_cpidx[0] = sc.max_cpidx[1] = -1;
    for (int m = 2; m <= n; ++m) {
        int rest = m, last = -1;
        bool composite_ok = true;
        for (std::size_t i = 0; i < sc.cprimes.size(); ++i) {
            int e = 0;
            while (rest % sc.cprimes[i] == 0) { rest /= sc.cprimes[i]; ++e; }
            if (e) {
                sc.factors[m].push_back({static_cast<int>(i), e});
                last = static_cast<int>(i);
            }
        }
        if (rest != 1) composite_ok = false;  // m is a free prime
        sc.max_cpidx[m] = composite_ok ? last : std::numeric_limits<int>::max();
        bool is_cprime = std::find(sc.cprimes.begin(), sc.cprimes.end(), m) != sc.cprimes.end();
        if (composite_ok && !is_cprime && last >= 0)
            sc.buckets[static_cast<std::size_t>(last)].push_back(
                {m, m / sc.cprimes[static_cast<std::size_t>(last)]});
    }
    // Integers partition by largest constrained prime factor, so the cells a
    // placed prime j can cover beyond its known offsets are exactly those of
    // m' <= band[j] whose largest factor index lies in [next, j].
    const std::size_t ncp = sc.cprimes.size();
    sc.wildcards.assign(ncp, std::vector<int>(ncp + 1, 0));
    for (std::size_t j = 0; j < ncp; ++j)
        for (std::size_t next = 0; next <= ncp; ++next) {
            int c = 0;
            for (int m = 2; m <= sc.band[j]; ++m) {
                const int idx = sc.max_cpidx[m];
                if (idx >= static_cast<int>(next) && idx <= static_cast<int>(j)) ++c;
            }
            sc.wildcards[j][next] = c;
        }
    // For any unit u of the group exponent, x -> u*x is an automorphism, and
    // h and alpha∘h induce the same multiplication table for any automorphism
    // alpha. So the first branched value only needs to range over orbit
    // minima of the unit-multiplication action.
    const int expo = type.back();
    auto mul = [&](int u, int x) {
        int acc = 0, base = x;
        for (; u; u >>= 1) {
            if (u & 1) acc = sc.add[acc][base];
            base = sc.add[base][base];
        }
        return acc;
    };
    sc.orbit_rep.assign(n, 1);
    for (int u = 2; u < expo; ++u) {
        if (std::gcd(u, expo) != 1) continue;
        for (int v = 1; v < n; ++v)
            if (mul(u, v) < v) { sc.orbit_rep[v] = 0; }
    }
    return sc;
}

struct TableSearch {
    const SearchContext& sc;
    bool existence_only;
    std::vector<int> h;        // m -> element index, -1 = unset
    std::vector<bool> used;    // element index taken
    std::vector<CayleyTable>& out;
    bool found = false;

    TableSearch(const SearchContext& sc_, bool existence_only_, std::vector<CayleyTable>& out_)
        : sc(sc_), existence_only(existence_only_), h(sc_.n + 1, -1),
          used(sc_.n, false), out(out_) {}

    // Group value of m on the current path; m must be 1, an assigned prime,
    // or a product of assigned primes.
    int val(int m) const {
        if (h[m] >= 0) return h[m];
        return value_of(m);
    }

    // Each remaining constrained prime p needs an unused translate of the
    // nested shape {h(m) : m <= floor(n/p)}. Count, for every v, the largest
    // prefix of the shape that still fits at v; cumulative counts over the
    // remaining primes (sorted by band) give a necessary condition.
    mutable std::vector<std::pair<int, int>> kn_;
    mutable std::vector<std::uint64_t> alive_, block_, cov_, snaps_;
    mutable std::vector<int> used_list_, snap_pop_;
    std::vector<int> trail_;  // cells marked used during forward checking

    // Returns a feasibility slack: negative means the position is pruned,
    // larger values mean looser Hall conditions (used to order candidates).
    int bands_feasible(std::size_t next) const {
        if (next >= sc.cprimes.size()) return std::numeric_limits<int>::max();
        const int kmax = sc.band[next];
        const std::size_t words = (static_cast<std::size_t>(sc.n) + 63) / 64;
        // Known shape cells: offsets h(m) for m <= kmax whose prime factors
        // are all assigned, as an ascending (m, offset) list. Skipping the
        // unknown cells keeps each condition necessary: it only weakens the
        // test.
        kn_.clear();
        for (int m = 2; m <= kmax; ++m)
            if (sc.max_cpidx[m] < static_cast<int>(next)) kn_.push_back({m, val(m)});
        // alive tracks bases whose known shape cells m <= (current level) are
        // all unused; snapshots after each applied offset serve the marking
        // pass below.
        alive_.assign(words, 0);
        used_list_.clear();
        for (int v = 0; v < sc.n; ++v) {
            if (used[v]) used_list_.push_back(v);
            else alive_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
        }
        const int unused_cells = sc.n - static_cast<int>(used_list_.size());
        snaps_.assign(words * (kn_.size() + 1), 0);
        snap_pop_.assign(kn_.size() + 1, 0);
        std::copy(alive_.begin(), alive_.end(), snaps_.begin());
        snap_pop_[0] = unused_cells;
        for (std::size_t e = 0; e < kn_.size(); ++e) {
            // Bases blocked at this offset o: {u - o : u used}.
            const int o = kn_[e].second;
            block_.assign(words, 0);
            const int no = sc.neg[o];
            for (int u : used_list_) {
                const int b = sc.add[u][no];
                block_[static_cast<std::size_t>(b) >> 6] |= 1ull << (b & 63);
            }
            int pop = 0;
            for (std::size_t w = 0; w < words; ++w) {
                alive_[w] &= ~block_[w];
                snaps_[(e + 1) * words + w] = alive_[w];
                pop += std::popcount(alive_[w]);
            }
            snap_pop_[e + 1] = pop;
        }
        // Piece-side Hall condition: pieces of size >= k must fit among the
        // bases whose known cells m <= k are all unused.
        auto entries_upto = [&](int k) {
            std::size_t e = 0;
            while (e < kn_.size() && kn_[e].first <= k) ++e;
            return e;
        };
        int slack = std::numeric_limits<int>::max();
        for (std::size_t j = next; j < sc.cprimes.size(); ++j) {
            const int needed = static_cast<int>(j - next) + 1;
            const int s = snap_pop_[entries_upto(sc.band[j])] - needed;
            if (s < 0) return -1;
            slack = std::min(slack, s);
        }
        // Cell-side Hall condition: a piece placed at a feasible base b covers
        // b plus its known offsets; every other unused cell must be taken by a
        // free prime or by a still-unknown offset of some piece (one wildcard
        // per unknown offset per piece).
        const int kmin = sc.band.back();
        long long wildcards = 0;
        for (std::size_t j = next; j < sc.cprimes.size(); ++j)
            wildcards += sc.wildcards[j][next];
        const long long budget = static_cast<long long>(sc.fprimes.size()) + wildcards;
        if (budget >= unused_cells) return slack;
        const std::size_t emin = entries_upto(kmin);
        cov_.assign(words, 0);
        for (std::size_t w = 0; w < words; ++w) cov_[w] = snaps_[emin * words + w];
        for (std::size_t e = 0; e < kn_.size(); ++e) {
            const int o = kn_[e].second;
            const std::size_t src = std::max(e + 1, emin) * words;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = snaps_[src + w];
                while (bits) {
                    const int b = static_cast<int>(w * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    const int c = sc.add[b][o];
                    cov_[static_cast<std::size_t>(c) >> 6] |= 1ull << (c & 63);
                }
            }
        }
        long long uncov = 0;
        for (std::size_t w = 0; w < words; ++w)
            uncov += std::popcount(snaps_[w] & ~cov_[w]);
        if (uncov > budget) return -1;
        return static_cast<int>(std::min<long long>(slack, budget - uncov));
    }

    int value_of(int m) const {
        // Sum of exponent * h(prime) in the group.
        int acc = 0;
        for (const auto& [pi, e] : sc.factors[m]) {
            int hv = h[sc.cprimes[static_cast<std::size_t>(pi)]];
            for (int t = 0; t < e; ++t) acc = sc.add[acc][hv];
        }
        return acc;
    }

    void emit_tables() {
        // Free primes take the leftover elements in every bijection.
        std::vector<int> leftover;
        for (int v = 0; v < sc.n; ++v)
            if (!used[v]) leftover.push_back(v);
        std::vector<int> perm = leftover;
        do {
            std::vector<int> full = h;
            for (std::size_t i = 0; i < sc.fprimes.size(); ++i)
                full[sc.fprimes[i]] = perm[i];
            std::vector<int> hinv(sc.n, 0);
            for (int m = 1; m <= sc.n; ++m) hinv[full[m]] = m;
            CayleyTable t(sc.n, std::vector<int>(static_cast<std::size_t>(sc.n) * sc.n));
            for (int a = 1; a <= sc.n; ++a)
                for (int b = 1; b <= sc.n; ++b)
                    t.set(a, b, hinv[sc.add[full[a]][full[b]]]);
            out.push_back(std::move(t));
            if (existence_only) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // With all core primes placed, every remaining constrained prime p only
    // needs an unused translate of the fixed shape {h(m) : m <= n/p}, and
    // free primes take single cells. Solve this exactly: repeatedly branch
    // on the lowest uncovered cell over the few ways to cover it.
    void leaf_core() {
        // Pieces, one per remaining constrained prime, in non-increasing size.
        // Free primes take whatever cells are left over, and the leftover cell
        // count always equals the number of free primes, so only the pieces
        // constrain anything.
        const std::size_t npieces = sc.cprimes.size() - sc.core_count;
        if (npieces == 0) {
            found = true;
            emit_tables();
            return;
        }
        const int kmax = sc.band[sc.core_count];
        std::vector<int> off(static_cast<std::size_t>(kmax) + 1, 0);
        for (int m = 2; m <= kmax; ++m) off[m] = val(m);
        std::vector<int> bases(npieces, -1);
        auto place = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == npieces) return true;
            const std::size_t j = sc.core_count + idx;
            const int k = sc.band[j];
            // Equal-size pieces are interchangeable: force increasing bases.
            int start = (idx > 0 && sc.band[j - 1] == k) ? bases[idx - 1] + 1 : 0;
            for (int base = start; base < sc.n; ++base) {
                bool fits = true;
                for (int m = 1; m <= k && fits; ++m)
                    if (used[sc.add[base][off[m]]]) fits = false;
                if (!fits) continue;
                for (int m = 1; m <= k; ++m) used[sc.add[base][off[m]]] = true;
                bases[idx] = base;
                h[sc.cprimes[j]] = base;
                if (bands_feasible(j + 1) >= 0 && self(self, idx + 1)) return true;
                h[sc.cprimes[j]] = -1;
                for (int m = 1; m <= k; ++m) used[sc.add[base][off[m]]] = false;
            }
            bases[idx] = -1;
            return false;
        };
        if (!place(place, 0)) return;
        // Record the solution; free primes take the leftover cells in
        // emit_tables.
        for (std::size_t idx = 0; idx < npieces; ++idx) {
            const std::size_t j = sc.core_count + idx;
            const int p = sc.cprimes[j];
            const int base = bases[idx];
            h[p] = base;
            for (int m = 2; m <= sc.band[j]; ++m) h[m * p] = sc.add[base][off[m]];
        }
        found = true;
        emit_tables();
        // Restore the entry state for a clean unwind.
        for (std::size_t idx = 0; idx < npieces; ++idx) {
            const std::size_t j = sc.core_count + idx;
            h[sc.cprimes[j]] = -1;
            for (int m = 2; m <= sc.band[j]; ++m) h[m * sc.cprimes[j]] = -1;
            for (int m = 1; m <= sc.band[j]; ++m)
                used[sc.add[bases[idx]][off[m]]] = false;
        }
    }

    void rec(std::size_t i) {
        if (found && existence_only) return;
        if (existence_only && i == sc.core_count) {
            leaf_core();
            return;
        }
        if (i == sc.cprimes.size()) {
            found = true;
            emit_tables();
            return;
        }
        int p = sc.cprimes[i];
        // In existence mode primes of the same band are interchangeable, so
        // force their values to be increasing.
        int start_v = 0;
        if (existence_only && i > 0 && sc.band[i] == sc.band[i - 1])
            start_v = h[sc.cprimes[i - 1]] + 1;
        // Places v and the forced composite values; returns the feasibility
        // slack (negative = dead end) without undoing on success. Bucket
        // entries ascend, so h[m / p] is always already set.
        auto try_place = [&](int v) -> int {
            h[p] = v;
            used[v] = true;
            trail_.push_back(v);
            for (const auto& [m, mdiv] : sc.buckets[i]) {
                int hv = sc.add[h[mdiv]][v];
                if (used[hv]) return -1;
                used[hv] = true;
                trail_.push_back(hv);
                h[m] = hv;
            }
            return existence_only ? bands_feasible(i + 1)
                                  : std::numeric_limits<int>::max();
        };
        auto undo_place = [&](std::size_t mark) {
            for (std::size_t t = mark; t < trail_.size(); ++t) used[trail_[t]] = false;
            trail_.resize(mark);
            h[p] = -1;
        };
        for (int v = start_v; v < sc.n && !(found && existence_only); ++v) {
            if (used[v]) continue;
            if (i == 0 && !sc.orbit_rep[v]) continue;
            const std::size_t mark = trail_.size();
            if (try_place(v) >= 0) rec(i + 1);
            undo_place(mark);
        }
    }
};

}  // namespace

std::vector<CayleyTable> satisfactory_groups(int n, const AbelianGroupType& type,
                                             bool existence_only) {
    long long prod = 1;
    for (int d : type) prod *= d;
    if (prod != n) throw std::invalid_argument("group type has wrong order");
    if (n == 1) return {CayleyTable(1, {1})};
    SearchContext sc = make_search_context(n, type);
    std::vector<CayleyTable> out;
    TableSearch search{sc, existence_only, std::vector<int>(n + 1, -1),
                       std::vector<bool>(n, false), out};
    search.h[1] = 0;
    search.used[0] = true;
    search.rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_groupless(int n) {
    for (const auto& type : abelian_groups_of_order(n))
        if (!satisfactory_groups(n, type, true).empty()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Linear coefficient vectors

std::optional<std::vector<int>> linear_coefficients(int n, LinearMode mode) {
    SmoothContext ctx(static_cast<u64>(n));
    const std::size_t s = ctx.pi_n();
    // Bucket each m <= n by the largest prime index in its factorization.
    std::vector<std::vector<std::pair<int, ExponentVector>>> buckets(s);
    for (int m = 2; m <= n; ++m) {
        ExponentVector e = ctx.factor(static_cast<u64>(m));
        for (std::size_t i = s; i-- > 0;)
            if (e[i]) { buckets[i].push_back({m, e}); break; }
    }
    std::vector<int> a(s, -1);
    std::vector<bool> used(n, false);
    used[0] = true;  // c(1) = 0
    std::optional<std::vector<int>> result;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == s) {
            result = a;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            a[i] = v;
            std::vector<int> placed;
            bool ok = true;
            for (const auto& [m, e] : buckets[i]) {
                long long lab = 0;
                for (std::size_t j = 0; j <= i; ++j) lab += static_cast<long long>(a[j]) * e[j];
                int l = static_cast<int>(lab % n);
                if (used[l]) { ok = false; break; }
                used[l] = true;
                placed.push_back(l);
            }
            if (ok && self(self, i + 1)) {
                if (mode == LinearMode::backtracking) return true;
                // Greedy keeps the committed prefix: success bubbles up.
                return true;
            }
            for (int l : placed) used[l] = false;
            if (ok && mode == LinearMode::greedy) {
                // Greedy committed to this minimal feasible v but deeper
                // levels failed: that is a dead end, not a reason to retry v.
                throw GreedyStuck("greedy choice a_" + std::to_string(i + 1) + " = " +
                                  std::to_string(v) + " admits no completion");
            }
        }
        if (mode == LinearMode::greedy)
            throw GreedyStuck("no feasible value for a_" + std::to_string(i + 1));
        a[i] = -1;
        return false;
    };
    try {
        if (!rec(rec, 0)) return std::nullopt;
    } catch (const GreedyStuck&) {
        throw;
    }
    return result;
}

// ---------------------------------------------------------------------------
// The (Z/p^2 Z)* construction

CayleyTable p2p_table(int p) {
    const int pp = p * p, n = pp - p;
    auto g = [&](int a) { return a % p != 0 ? a : pp - a / p; };
    auto label = [&](int r) { return r <= n ? r : p * (pp - r); };
    CayleyTable t(n, std::vector<int>(static_cast<std::size_t>(n) * n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            t.set(a, b, label(static_cast<int>((static_cast<long long>(g(a)) * g(b)) % pp)));
    return t;
}

Coloring table_to_coloring(const CayleyTable& t) {
    return Coloring(SmoothContext(static_cast<u64>(t.n)), GroupColoring{t});
}

CayleyTable strong_rep_to_table(u64 n, u64 k, u64 p) {
    Coloring c = coloring_from_strong_rep(n, k, p);
    const int ni = static_cast<int>(n);
    CayleyTable t(ni, std::vector<int>(n * n));
    for (int a = 1; a <= ni; ++a)
        for (int b = 1; b <= ni; ++b)
            t.set(a, b, c.color(static_cast<u64>(a) * static_cast<u64>(b)));
    return t;
}

}  // namespace smoothcolor
