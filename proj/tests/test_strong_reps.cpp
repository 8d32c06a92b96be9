#include "doctest.h"
#include "expected_tables.hpp"
#include "smoothcolor/groups.hpp"
#include "smoothcolor/strong_reps.hpp"

using namespace smoothcolor;

TEST_CASE("is_strong_representative on known values") {
    for (const auto& [n, kp] : expected::smallest_strong_rep) {
        if (n > 12) continue;
        CHECK(is_strong_representative(n, kp.first));
    }
    CHECK_FALSE(is_strong_representative(7, 1));   // p = 8 not prime
    CHECK_FALSE(is_strong_representative(7, 4));   // p = 29: collisions
    CHECK(is_strong_representative(13, 198364));
    CHECK(is_strong_representative(32, 162802814486ULL));
    CHECK(is_strong_representative(25, 1170546910ULL));
    CHECK(is_strong_representative(27, 6700156678ULL));
}

TEST_CASE("smallest strong representative, small n") {
    for (u64 n = 1; n <= 12; ++n) {
        auto r = smallest_strong_representative(n);
        REQUIRE(r.has_value());
        CHECK(*r == expected::smallest_strong_rep.at(n));
    }
    auto r13 = smallest_strong_representative(13, 300'000);
    REQUIRE(r13.has_value());
    CHECK(*r13 == std::pair<u64, u64>{198364, 2578733});
    // exhausting the limit reports no result
    CHECK_FALSE(smallest_strong_representative(13, 100'000).has_value());
}

TEST_CASE("search result is independent of thread count") {
    for (unsigned t : {1u, 2u, 5u}) {
        auto r = smallest_strong_representative(7, 1'000, t);
        REQUIRE(r.has_value());
        CHECK(*r == std::pair<u64, u64>{94, 659});
    }
}

TEST_CASE("coloring from strong rep") {
    Coloring c = coloring_from_strong_rep(6, 1, 7);
    CHECK(verify_satisfactory(c, 100'000).ok);
    CHECK_THROWS_AS(coloring_from_strong_rep(7, 4, 29), NotAStrongRep);
}

TEST_CASE("counting strong representatives") {
    CHECK(count_strong_reps(2, 10) == 2);     // 3 and 7
    CHECK(count_strong_reps(2, 1000) == 87);
    CHECK(count_strong_reps(5, 1000) == count_strong_reps(5, 1000, 3));
}

TEST_CASE("order-5 classification") {
    CHECK(classify_order5(11, 2) == Order5Class::c5);
    CHECK(classify_order5(701, 140) == Order5Class::c1);
    CHECK(classify_order5(2311, 462) == Order5Class::c5);
    auto d = density_table_order5(100'000);
    CHECK(d.c1 + d.c5 == d.all);
    CHECK(d.all <= d.totient_primes);
    CHECK(d.totient_primes > 0);
}

TEST_CASE("weak representation of a cyclic table") {
    auto w = weak_representation(expected::z6_103(), 103);
    REQUIRE(w.qs.size() == 3);
    CHECK(w.P == 103);
    for (u64 q : w.qs) CHECK(is_prime_u64(q));
    REQUIRE(w.coloring.has_value());
    CHECK(verify_satisfactory(*w.coloring, 10'000).ok);
    Box win = default_window(SmoothContext(6), 6);
    CHECK(colorings_equal(*w.coloring, table_to_coloring(expected::z6_103()), win));
}
