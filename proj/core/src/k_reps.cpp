#include "smoothcolor/k_reps.hpp"

#include <algorithm>

#include "smoothcolor/strong_reps.hpp"

namespace smoothcolor {

namespace {

// Binomial coefficients as exact integers.
std::vector<std::vector<mpz_class>> binomials(unsigned rows) {
    std::vector<std::vector<mpz_class>> C(rows + 1);
    for (unsigned i = 0; i <= rows; ++i) {
        C[i].assign(i + 1, 0);
        C[i][0] = C[i][i] = 1;
        for (unsigned j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
    }
    return C;
}

std::vector<mpq_class> bernoulli_numbers(unsigned m) {
    auto C = binomials(m + 1);
    std::vector<mpq_class> b(m + 1);
    b[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        mpq_class s = 0;
        for (unsigned j = 0; j < i; ++j) s += mpq_class(C[i + 1][j]) * b[j];
        b[i] = -s / mpq_class(i + 1);
    }
    return b;
}

// Exact division of poly by (b1*x + b0); requires the root -b0/b1.
RationalPolynomial divide_linear(const RationalPolynomial& p, const mpq_class& b0,
                                 const mpq_class& b1) {
    std::vector<mpq_class> c = p.coeffs;
    std::vector<mpq_class> q(c.size() - 1);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        q[i - 1] = c[i] / b1;
        c[i - 1] -= q[i - 1] * b0;
    }
    RationalPolynomial out{std::move(q)};
    out.trim();
    return out;
}

// mpq_class(num, den) does not canonicalize on its own.
mpq_class frac(long num, unsigned long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

void RationalPolynomial::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

RationalPolynomial bernoulli_polynomial(unsigned m) {
    auto b = bernoulli_numbers(m);
    auto C = binomials(m);
    RationalPolynomial p;
    p.coeffs.assign(m + 1, 0);
    // B_m(x) = sum_j C(m,j) b_j x^{m-j}
    for (unsigned j = 0; j <= m; ++j) p.coeffs[m - j] += mpq_class(C[m][j]) * b[j];
    return p;
}

RationalPolynomial power_sum_polynomial(unsigned k) {
    RationalPolynomial B = bernoulli_polynomial(k + 1);
    auto C = binomials(k + 1);
    // B_{k+1}(x+1) by binomial expansion, minus the constant B_{k+1}(0).
    RationalPolynomial S;
    S.coeffs.assign(k + 2, 0);
    for (unsigned i = 0; i <= k + 1; ++i)
        for (unsigned j = 0; j <= i; ++j) S.coeffs[j] += B.coeffs[i] * mpq_class(C[i][j]);
    S.coeffs[0] -= B.coeffs[0];
    for (auto& c : S.coeffs) c /= mpq_class(k + 1);
    S.trim();
    return S;
}

RationalPolynomial deflate_trivial_factors(const RationalPolynomial& poly) {
    RationalPolynomial p = poly;
    p.trim();
    while (p.coeffs.size() > 1 && p.coeffs[0] == 0) p.coeffs.erase(p.coeffs.begin());
    while (p.coeffs.size() > 1 && p(mpq_class(-1)) == 0)
        p = divide_linear(p, 1, 1);
    while (p.coeffs.size() > 1 && p(frac(-1, 2)) == 0)
        p = divide_linear(p, 1, 2);
    // Clear denominators, divide out the content.
    mpz_class den = 1;
    for (const auto& c : p.coeffs) den = den / gcd(den, c.get_den()) * c.get_den();
    mpz_class content = 0;
    std::vector<mpz_class> ic(p.coeffs.size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        ic[i] = mpz_class(p.coeffs[i] * den);
        content = gcd(content, ic[i]);
    }
    RationalPolynomial out;
    out.coeffs.reserve(ic.size());
    for (auto& c : ic) out.coeffs.emplace_back(c / content);
    return out;
}

mpz_class remainder_constant(const RationalPolynomial& poly, unsigned k) {
    mpq_class v = poly(frac(-1, k));
    if (v == 0)
        throw DividesExactly("kx + 1 divides the polynomial; the bound is vacuous");
    v.canonicalize();
    return abs(v.get_num());
}

std::vector<std::pair<u64, u64>> four_m_representatives(unsigned k) {
    if (k % 4 != 0) throw std::invalid_argument("k must be a multiple of 4");
    std::vector<std::pair<u64, u64>> out;
    const u64 limit = static_cast<u64>(k) * k;
    for (u64 p = k + 1; p < limit; p += k)
        if (is_prime_u64(p) && is_strong_representative((p - 1) / k, k))
            out.push_back({(p - 1) / k, p});
    return out;
}

KRepReport enumerate_k_representatives(unsigned k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    KRepReport rep;
    rep.k = k;

    if (k == 3) {
        // No prime p = 3n+1 has 1..n with distinct cubes beyond trivial n,
        // because cubes mod p hit each value 3 times on a third of the range.
        rep.method = KRepMethod::none_by_thm;
        return rep;
    }

    // The divisibility bound from the deflated power-sum polynomial, computed
    // for the report even when the p < k^2 scan decides the answer.
    auto bound_from = [&](const RationalPolynomial& p) {
        return remainder_constant(deflate_trivial_factors(p), k);
    };
    try {
        rep.bound_constant = bound_from(power_sum_polynomial(k));
        rep.method = KRepMethod::faulhaber_remainder;
    } catch (const DividesExactly&) {
        rep.bound_constant = bound_from(power_sum_polynomial(2 * k));
        rep.method = KRepMethod::bernoulli_2k_fallback;
    }

    if (k % 4 == 0) {
        // p < k^2 here, so the scan is both complete and cheap.
        rep.method = KRepMethod::bound_p_lt_k2;
        rep.verified = four_m_representatives(k);
        for (auto& [n, p] : rep.verified) rep.candidates.push_back({n, p});
        return rep;
    }

    // Candidates: prime divisors p = 1 (mod k) of the bound constant.
    mpz_class L = rep.bound_constant;
    std::vector<u64> prime_divisors;
    for (u64 d = 2; d <= 10'000'000 && mpz_class(d) * d <= L; ++d) {
        if (L % d == 0) {
            prime_divisors.push_back(d);
            while (L % d == 0) L /= d;
        }
    }
    if (L > 1) {
        if (!L.fits_ulong_p()) {
            rep.complete = false;
        } else {
            u64 rest = L.get_ui();
            if (is_prime_u64(rest)) {
                prime_divisors.push_back(rest);
            } else {
                for (const auto& [q, e] : factor_u64(rest)) prime_divisors.push_back(q);
            }
        }
    }
    std::sort(prime_divisors.begin(), prime_divisors.end());
    for (u64 p : prime_divisors) {
        if (p % k != 1) continue;
        u64 n = (p - 1) / k;
        rep.candidates.push_back({n, p});
        if (is_strong_representative(n, k)) rep.verified.push_back({n, p});
    }
    return rep;
}

}  // namespace smoothcolor
