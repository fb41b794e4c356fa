#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <izeta/oracle.hpp>
#include <izeta/poly.hpp>

using namespace izeta;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CubicRingSpec(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(CubicRingSpec(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(CubicRingSpec(2, 0), std::invalid_argument);
    const CubicRingSpec s(1, 3);
    CHECK(s.bad_prime_product() == 6);
    CHECK(s.bad_primes() == std::vector<BigInt>{2, 3});
    CHECK(CubicRingSpec(-3, 2).bad_primes() == std::vector<BigInt>{2, 3, 5});
}

TEST_CASE("is_ideal on explicit lattices") {
    const CubicRingSpec s13(1, 3);
    CHECK(is_ideal(s13, {1, 1, 1, 0, 0, 0}));
    CHECK(is_ideal(s13, {2, 1, 1, 0, 0, 0}));
    const CubicRingSpec s2m2(2, -2);
    CHECK_FALSE(is_ideal(s2m2, {1, 1, 2, 0, 0, 0}));
}

TEST_CASE("is_ideal is a lattice property, not a basis property") {
    // re-representing the same lattice never changes the verdict
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d_pick(1, 6), a_pick(0, 40);
    const CubicRingSpec specs[] = {CubicRingSpec(1, 3), CubicRingSpec(2, -2), CubicRingSpec(-3, 2),
                                   CubicRingSpec(9, 18)};
    for (int iter = 0; iter < 500; ++iter) {
        const CubicRingSpec& s = specs[iter % 4];
        HNFBasis h{d_pick(rng), d_pick(rng), d_pick(rng), 0, 0, 0};
        h.a1 = BigInt(a_pick(rng)) % h.d2;
        h.a2 = BigInt(a_pick(rng)) % h.d3;
        h.a3 = BigInt(a_pick(rng)) % h.d3;
        const bool verdict = is_ideal(s, h);
        // v1 += v2
        CHECK(is_ideal(s, {h.d1, h.d2, h.d3, h.a1 + h.d2, h.a2 + h.a3, h.a3}) == verdict);
        // v1 += v3
        CHECK(is_ideal(s, {h.d1, h.d2, h.d3, h.a1, h.a2 + h.d3, h.a3}) == verdict);
        // v2 += v3
        CHECK(is_ideal(s, {h.d1, h.d2, h.d3, h.a1, h.a2, h.a3 + h.d3}) == verdict);
    }
}

TEST_CASE("per-type counts") {
    const CubicRingSpec s(2, -2);
    CHECK(oracle_count_type(s, 2, {0, 0, 0}) == 1);
    CHECK(oracle_count_type(s, 2, {1, 1, 1}) == 2);
    CHECK(oracle_count_type(CubicRingSpec(1, 3), 2, {0, 0, 1}) == 0);
}

TEST_CASE("local counts") {
    CHECK(oracle_local_counts(CubicRingSpec(1, 3), 2, 1) == std::vector<BigInt>{1, 2});
    CHECK(oracle_local_counts(CubicRingSpec(2, -2), 2, 0) == std::vector<BigInt>{1});
    // two routes to a_3 for x(x-3)(x-6): enumeration and the local series of
    // the (1,1) closed form; both give 1 (x^3 has a single root mod 3)
    const auto counts = oracle_local_counts(CubicRingSpec(3, 6), 3, 1);
    CHECK(counts == std::vector<BigInt>{1, 1});
    CHECK(counts == expand_over_cube(delta(ValuationProfile(3, 1, 1)), 1));
}

TEST_CASE("global counts") {
    const CubicRingSpec s(1, 3);
    CHECK(oracle_global_count(s, 1) == 1);
    CHECK(oracle_global_count(CubicRingSpec(2, -2), 1) == 1);
    CHECK(oracle_global_count(s, 6) == 4);
    CHECK(oracle_global_count(s, 7) == 3);
}

TEST_CASE("multiplicativity over coprime indices") {
    const CubicRingSpec s(1, 3);
    std::vector<BigInt> a(61);
    for (long n = 1; n <= 60; ++n) a[n] = oracle_global_count(s, n);
    for (long m = 2; m <= 60; ++m)
        for (long n = 2; m * n <= 60; ++n)
            if (std::gcd(m, n) == 1) CHECK(a[m * n] == a[m] * a[n]);
}

TEST_CASE("good primes count like zeta(s)^3") {
    const CubicRingSpec s(1, 3);
    for (const long p : {5, 7}) {
        const auto counts = oracle_local_counts(s, p, 3);
        CHECK(counts == std::vector<BigInt>{1, 3, 6, 10});
    }
}

TEST_CASE("power-basis recount agrees") {
    for (const auto& s : {CubicRingSpec(1, 3), CubicRingSpec(2, -2)})
        for (long n = 1; n <= 40; ++n)
            CHECK(oracle_global_count(s, n, kDefaultEnumerationBudget, CoordBasis::powers) ==
                  oracle_global_count(s, n, kDefaultEnumerationBudget, CoordBasis::shifted_products));
}

TEST_CASE("enumeration budget is enforced") {
    const CubicRingSpec s(1, 3);
    CHECK_THROWS_AS(oracle_count_type(s, 2, {0, 0, 30}, 1000), BudgetExceeded);
    CHECK_THROWS_AS(oracle_local_counts(s, 2, 12, 1000), BudgetExceeded);
    CHECK_THROWS_AS(oracle_global_count(s, 4096, 1000), BudgetExceeded);
    CHECK(oracle_global_count(s, 4, 1000) == 5);
}
