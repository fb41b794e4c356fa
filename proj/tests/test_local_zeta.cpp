#include <catch2/catch_amalgamated.hpp>

#include <izeta/local_zeta.hpp>

using namespace izeta;

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(ValuationProfile(4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ValuationProfile(2, 3, 1), std::invalid_argument);
    const ValuationProfile pr(2, 1, 2);
    CHECK(pr.a() == 1);
    CHECK(pr.c() == 2);
}

TEST_CASE("realize_profile normalizes difference valuations") {
    CHECK(realize_profile(2, 1, 3) == ValuationProfile(2, 0, 1));
    CHECK(realize_profile(2, 2, -2) == ValuationProfile(2, 1, 2));
    CHECK(realize_profile(3, 3, 6) == ValuationProfile(3, 1, 1));
    CHECK(realize_profile(3, -1, 8) == ValuationProfile(3, 0, 2));
    CHECK(realize_profile(5, -3, 2) == ValuationProfile(5, 0, 1));
    // good prime: trivial profile
    CHECK(realize_profile(7, 1, 3) == ValuationProfile(7, 0, 0));
    CHECK_THROWS_AS(realize_profile(2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(realize_profile(2, 0, 3), std::invalid_argument);
}

TEST_CASE("region dispatch") {
    const ValuationProfile q(2, 1, 2);
    CHECK(region_of(q, 5, 9) == RegionTag::R1);
    CHECK(region_of(q, 1, 1) == RegionTag::R6);
    CHECK(region_of(q, 2, 2) == RegionTag::R6);
    CHECK(region_of(ValuationProfile(2, 0, 1), 1, 0) == RegionTag::Zero);
    CHECK(region_of(q, 4, 2) == RegionTag::R2);
    CHECK(region_of(q, 1, 5) == RegionTag::R3);
    CHECK(region_of(ValuationProfile(2, 2, 3), 0, 2) == RegionTag::R4);
    CHECK(region_of(ValuationProfile(2, 2, 3), 0, 1) == RegionTag::R5);
}

TEST_CASE("region partition over the standard box") {
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned c = a; c <= 6; ++c) {
            const ValuationProfile pr(2, a, c);
            const unsigned box = 2 * (a + c) + 4;
            for (unsigned r3 = 0; r3 <= box; ++r3)
                for (unsigned r2 = 0; r2 <= box; ++r2) CHECK_NOTHROW(region_of(pr, r3, r2));
        }
}

TEST_CASE("sbar_size") {
    // p^(r3-i) - floor(p^(r3-i-1)) at (r3=2, i=1) is 3^1 - 3^0 = 2
    CHECK(sbar_size(ValuationProfile(3, 1, 1), 2, 2, 1) == 2);
    CHECK(sbar_size(ValuationProfile(3, 1, 1), 2, 2, 2) == 1);
    CHECK(sbar_size(ValuationProfile(2, 1, 2), 3, 2, 2) == 1);
    CHECK(sbar_size(ValuationProfile(2, 1, 2), 3, 2, 0) == 2);
    CHECK_THROWS_AS(sbar_size(ValuationProfile(2, 1, 2), 1, 2, 0), std::domain_error);
    CHECK_THROWS_AS(sbar_size(ValuationProfile(2, 1, 2), 3, 2, 3), std::domain_error);
    CHECK_THROWS_AS(sbar_size(ValuationProfile(2, 1, 1), 3, 3, 1), std::domain_error);
}

TEST_CASE("xj_size") {
    const ValuationProfile q(2, 1, 2);
    CHECK(xj_size(q, 1, 1, 0) == 0);
    CHECK(xj_size(q, 1, 1, 1) == 1);
    CHECK(xj_size(ValuationProfile(5, 1, 1), 1, 1, 0) == 3);
    CHECK_THROWS_AS(xj_size(q, 1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(xj_size(q, 9, 5, 0), std::domain_error);
}

TEST_CASE("X_j decomposition sums to the coset count on R6") {
    for (const long pv : {2, 3, 5})
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned c = a; c <= 4; ++c) {
                const ValuationProfile pr(pv, a, c);
                for (unsigned r3 = 0; r3 < a + c; ++r3)
                    for (unsigned r2 = std::max(a, r3); r2 < a + r3; ++r2) {
                        BigInt sum = 0;
                        for (unsigned j = 0; j <= r3 + a - r2; ++j) sum += xj_size(pr, r2, r3, j);
                        CHECK(sum == sbar_size(pr, r2, r3, r2 - a));
                    }
            }
}

TEST_CASE("e_terms normal forms") {
    CHECK(e_terms(ValuationProfile(2, 1, 2), 1, 1) == ETermList{{2, 1}, {4, 2}});
    CHECK(e_terms(ValuationProfile(2, 0, 1), 0, 0) == ETermList{{1, 0}});
    CHECK(e_terms(ValuationProfile(3, 1, 1), 5, 5) == ETermList{{27, 2}});
    CHECK(e_terms(ValuationProfile(2, 0, 1), 0, 1).empty());
    // E_1(2,2) + E_2(2,2) + E_3(2,2) for profile (1,2):
    // (p^3-p^2) from r1>=1 and (p^3-p^2)+p^2 from r1>=2
    CHECK(e_terms(ValuationProfile(2, 1, 2), 2, 2) == ETermList{{4, 1}, {8, 2}});
}

TEST_CASE("count_type") {
    for (const auto& pr : {ValuationProfile(2, 1, 2), ValuationProfile(3, 0, 0), ValuationProfile(5, 2, 3)})
        CHECK(count_type(pr, {0, 0, 0}) == 1);
    CHECK(count_type(ValuationProfile(2, 0, 1), {0, 0, 1}) == 0);
    CHECK(count_type(ValuationProfile(2, 1, 2), {1, 1, 1}) == 2);
    CHECK(count_type(ValuationProfile(2, 1, 2), {0, 1, 1}) == 0);
    CHECK(count_type(ValuationProfile(2, 1, 2), {9, 1, 1}) == 6);
}

TEST_CASE("local numerator golden values") {
    CHECK(delta(ValuationProfile(5, 0, 1)) == IntPoly{1, -1, 5});
    CHECK(delta(ValuationProfile(2, 0, 0)) == IntPoly{1});
    CHECK(delta(ValuationProfile(97, 0, 0)) == IntPoly{1});
    CHECK(delta(ValuationProfile(3, 1, 1)) == IntPoly{1, -2, 4, 3, 12, -18, 27});
    CHECK(delta(ValuationProfile(7, 0, 2)) == IntPoly{1, -1, 7, -7, 49});
}

TEST_CASE("the R1 contribution is (p x^2)^(2a+c)") {
    for (const long pv : {2, 5})
        for (unsigned a = 0; a <= 2; ++a)
            for (unsigned c = a; c <= 3; ++c) {
                const ValuationProfile pr(pv, a, c);
                bool found = false;
                for (const auto& g : geometric_terms(pr))
                    if (g.denom_deg == 3) {
                        CHECK_FALSE(found);
                        found = true;
                        CHECK(g.coeff == ipow(pv, 2 * a + c));
                        CHECK(g.xshift == 2 * (2 * a + c));
                    }
                CHECK(found);
            }
}

TEST_CASE("closed form agrees with type-by-type counts") {
    for (const long pv : {2, 3, 5})
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned c = a; c <= 4; ++c) CHECK_NOTHROW(check_local_numerator(ValuationProfile(pv, a, c)));
}

TEST_CASE("structural invariants of delta on the standard grid") {
    for (const long pv : {2, 3, 5})
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned c = a; c <= 6; ++c) {
                const ValuationProfile pr(pv, a, c);
                const IntPoly d = delta(pr);
                CHECK(d.coeff(0) == 1);
                CHECK(d.degree() == static_cast<int>(2 * (2 * a + c)));
                for (const BigInt& v : expand_over_cube(d, 40)) CHECK(v > 0);
            }
}
