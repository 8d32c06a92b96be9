#include "doctest.h"
#include "smoothcolor/smooth.hpp"

using namespace smoothcolor;

TEST_CASE("primes_upto") {
    CHECK(primes_upto(1).empty());
    CHECK(primes_upto(2) == std::vector<u64>{2});
    CHECK(primes_upto(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_upto(31).size() == 11);
    CHECK(primes_upto(100).size() == 25);
}

TEST_CASE("factor and reconstruct") {
    SmoothContext ctx(10);
    CHECK(ctx.pi_n() == 4);
    CHECK(ctx.factor(1) == ExponentVector{0, 0, 0, 0});
    CHECK(ctx.factor(360) == ExponentVector{3, 2, 1, 0});
    CHECK(ctx.reconstruct({3, 2, 1, 0}) == 360);
    CHECK(ctx.is_smooth(2100));
    CHECK_FALSE(ctx.is_smooth(11));
    CHECK_THROWS_AS(ctx.factor(22), NotSmooth);
    try {
        ctx.factor(26);
        FAIL("expected NotSmooth");
    } catch (const NotSmooth& e) {
        CHECK(e.m == 26);
        CHECK(e.witness == 13);
    }
}

TEST_CASE("enumerate smooth numbers") {
    SmoothContext ctx(6);
    auto v = ctx.enumerate(32);
    CHECK(v.size() == 19);
    CHECK(v.front() == 1);
    CHECK(v.back() == 32);
    CHECK(std::is_sorted(v.begin(), v.end()));
    for (u64 m : v) CHECK(ctx.is_smooth(m));

    // |K_2 up to 2^10| = 11
    SmoothContext two(2);
    CHECK(two.enumerate(1024).size() == 11);
}

TEST_CASE("modular arithmetic near 2^63") {
    CHECK(powmod(2, 84, 421) == 279);
    CHECK(mulmod(3037000499ULL, 3037000499ULL, 5209690063553ULL) == 1290470365423ULL);
    CHECK(powmod(3, 0, 7) == 1);
    CHECK(powmod(10, 18, 1000000007ULL) == powmod(10, 9, 1000000007ULL) *
                                               powmod(10, 9, 1000000007ULL) % 1000000007ULL);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));          // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to 2,3,5,7
    CHECK(is_prime_u64(2578733));
    CHECK(is_prime_u64(5209690063553ULL));
    CHECK(is_prime_u64(180904230307ULL));
    CHECK_FALSE(is_prime_u64(1358652193ULL * 3));
    // pi(10^4) = 1229
    u64 count = 0;
    for (u64 m = 2; m < 10000; ++m)
        if (is_prime_u64(m)) ++count;
    CHECK(count == 1229);
}

TEST_CASE("factor_u64") {
    auto f = factor_u64(360);
    CHECK(f == std::vector<std::pair<u64, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factor_u64(2578733) == std::vector<std::pair<u64, int>>{{2578733, 1}});
    CHECK(factor_u64(649518683ULL) ==
          std::vector<std::pair<u64, int>>{{11, 5}, {37, 1}, {109, 1}});
    auto big = factor_u64(1358652193ULL * 2578733ULL);
    CHECK(big == std::vector<std::pair<u64, int>>{{2578733, 1}, {1358652193, 1}});
}
