#include "doctest.h"
#include "expected_tables.hpp"
#include "smoothcolor/k_reps.hpp"
#include "smoothcolor/strong_reps.hpp"

using namespace smoothcolor;

TEST_CASE("bernoulli polynomials") {
    auto b1 = bernoulli_polynomial(1);  // x - 1/2
    REQUIRE(b1.coeffs.size() == 2);
    CHECK(b1.coeffs[0] == mpq_class(-1, 2));
    CHECK(b1.coeffs[1] == 1);
    auto b2 = bernoulli_polynomial(2);  // x^2 - x + 1/6
    CHECK(b2.coeffs[0] == mpq_class(1, 6));
    CHECK(b2.coeffs[1] == -1);
    CHECK(b2.coeffs[2] == 1);
    auto b4 = bernoulli_polynomial(4);
    CHECK(b4.coeffs[0] == mpq_class(-1, 30));
}

TEST_CASE("power sum polynomials evaluate to actual power sums") {
    for (unsigned k = 1; k <= 9; ++k) {
        auto P = power_sum_polynomial(k);
        for (unsigned x = 0; x <= 6; ++x) {
            mpz_class want = 0, t;
            for (unsigned i = 1; i <= x; ++i) {
                mpz_ui_pow_ui(t.get_mpz_t(), i, k);
                want += t;
            }
            CHECK(P(mpq_class(x)) == mpq_class(want));
        }
    }
}

TEST_CASE("deflation removes exactly the trivial roots") {
    for (unsigned k : {4u, 5u, 6u, 7u, 9u}) {
        auto q = deflate_trivial_factors(power_sum_polynomial(k));
        CHECK(q(mpq_class(0)) != 0);
        CHECK(q(mpq_class(-1)) != 0);
        CHECK(q(mpq_class(-1, 2)) != 0);
        for (const auto& c : q.coeffs) CHECK(c.get_den() == 1);
    }
}

TEST_CASE("bound constants for k = 4..10") {
    for (const auto& [k, want] : expected::krep_bound_constants) {
        auto rep = enumerate_k_representatives(k);
        CHECK(rep.bound_constant == mpz_class(want));
    }
}

TEST_CASE("k = 3 has no representatives") {
    auto rep = enumerate_k_representatives(3);
    CHECK(rep.method == KRepMethod::none_by_thm);
    CHECK(rep.verified.empty());
    CHECK(rep.complete);
}

TEST_CASE("verified k-representative lists") {
    using pairs = std::vector<std::pair<u64, u64>>;
    CHECK(enumerate_k_representatives(4).verified == pairs{{1, 5}});
    CHECK(enumerate_k_representatives(5).verified == pairs{{2, 11}});
    CHECK(enumerate_k_representatives(6).verified == pairs{{1, 7}, {2, 13}});
    CHECK(enumerate_k_representatives(7).verified == pairs{});
    auto r8 = enumerate_k_representatives(8);
    CHECK(r8.method == KRepMethod::bound_p_lt_k2);
    CHECK(r8.verified == pairs{});
    CHECK(enumerate_k_representatives(10).verified == pairs{{1, 11}});
    // every verified entry must actually pass the direct test
    for (unsigned k : {5u, 6u, 9u, 10u})
        for (auto [n, p] : enumerate_k_representatives(k).verified) {
            CHECK(p == k * n + 1);
            CHECK(is_strong_representative(n, (p - 1) / n));
        }
}

TEST_CASE("4m scan matches the frozen table") {
    for (const auto& [k, want] : expected::four_m_reps) {
        CHECK(four_m_representatives(k) == want);
        auto rep = enumerate_k_representatives(k);
        CHECK(rep.method == KRepMethod::bound_p_lt_k2);
        CHECK(rep.verified == want);
    }
}
