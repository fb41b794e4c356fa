#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "poly.hpp"

namespace izeta {

// Valuation profile (p, a, c) with a = [alpha] = [beta] <= c = [beta-alpha].
// The ultrametric inequality forces this normal form on any realization, and
// the triple is the only input the local-factor machinery needs.
class ValuationProfile {
public:
    ValuationProfile(BigInt p, unsigned a, unsigned c) : p_(std::move(p)), a_(a), c_(c) {
        if (!is_prime(p_)) throw std::invalid_argument("ValuationProfile: p = " + p_.str() + " is not prime");
        if (a_ > c_) throw std::invalid_argument("ValuationProfile: requires a <= c");
    }

    const BigInt& p() const { return p_; }
    unsigned a() const { return a_; }
    unsigned c() const { return c_; }

    friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;

private:
    BigInt p_;
    unsigned a_;
    unsigned c_;
};

// Normalized profile of Z[x]/x(x-alpha)(x-beta) at p, read off the
// valuations of the pairwise root differences {alpha, beta, beta-alpha}.
// The smallest valuation occurs twice (ultrametric), so the profile is
// independent of how the three roots are labeled.
inline ValuationProfile realize_profile(const BigInt& p, const BigInt& alpha, const BigInt& beta) {
    if (alpha == 0 || beta == 0 || alpha == beta)
        throw std::invalid_argument("realize_profile: 0, alpha, beta must be pairwise distinct");
    std::array<unsigned long, 3> v{vp(alpha, p).value(), vp(beta, p).value(), vp(beta - alpha, p).value()};
    std::sort(v.begin(), v.end());
    if (v[0] != v[1]) throw InternalError("realize_profile: ultrametric violation in difference valuations");
    return ValuationProfile(p, static_cast<unsigned>(v[0]), static_cast<unsigned>(v[2]));
}

// Diagonal exponents (r1, r2, r3) of a triangular ideal basis; the index of
// such an ideal is p^(r1+r2+r3).
struct IdealType {
    unsigned r1 = 0;
    unsigned r2 = 0;
    unsigned r3 = 0;

    unsigned weight() const { return r1 + r2 + r3; }

    friend bool operator==(const IdealType&, const IdealType&) = default;
};

enum class RegionTag { R1, R2, R3, R4, R5, R6, Zero };

inline const char* to_string(RegionTag t) {
    switch (t) {
        case RegionTag::R1: return "R1";
        case RegionTag::R2: return "R2";
        case RegionTag::R3: return "R3";
        case RegionTag::R4: return "R4";
        case RegionTag::R5: return "R5";
        case RegionTag::R6: return "R6";
        case RegionTag::Zero: return "ZERO";
    }
    return "?";
}

// The (r3, r2) quadrant splits into six regions plus the empty zone
// r2 < min(r3, c); on each region the operator E(r2, r3) has one closed
// form.  The seven predicates must match exactly once.
inline RegionTag region_of(const ValuationProfile& pr, unsigned r3, unsigned r2) {
    const unsigned a = pr.a(), c = pr.c();
    const std::array<std::pair<RegionTag, bool>, 7> cases{{
        {RegionTag::Zero, r2 < std::min(r3, c)},
        {RegionTag::R1, r2 >= a + c && r3 >= a + c},
        {RegionTag::R2, r3 >= c && r2 >= c && r2 < std::min(a + c, r3)},
        {RegionTag::R3, a <= r3 && r3 < a + c && r2 >= r3 + a},
        {RegionTag::R4, r3 < a && r2 >= a + r3},
        {RegionTag::R5, r3 <= r2 && r2 < a},
        {RegionTag::R6, r3 < a + c && std::max(a, r3) <= r2 && r2 < a + r3},
    }};
    int hits = 0;
    RegionTag tag = RegionTag::Zero;
    for (const auto& [t, matched] : cases)
        if (matched) {
            ++hits;
            tag = t;
        }
    if (hits != 1)
        throw InternalError("region_of: partition violation at (r3=" + std::to_string(r3) + ", r2=" +
                            std::to_string(r2) + ") for (a=" + std::to_string(pr.a()) + ", c=" +
                            std::to_string(pr.c()) + "): " + std::to_string(hits) + " regions matched");
    return tag;
}

// |Sbar_i(r2, r3)| = p^(r3-i) - floor(p^(r3-i-1)): the number of a3-cosets
// of valuation exactly i, with the floor closing the i = r3 case.
inline BigInt sbar_size(const ValuationProfile& pr, unsigned r2, unsigned r3, unsigned i) {
    if (r3 > r2) throw std::domain_error("sbar_size: requires r3 <= r2");
    const unsigned m = r3 > pr.c() ? r3 - pr.c() : 0;
    if (i < m || i > r3) throw std::domain_error("sbar_size: i outside [max(0, r3-c), r3]");
    const long d = static_cast<long>(r3) - static_cast<long>(i);
    return pow_floor(pr.p(), d) - pow_floor(pr.p(), d - 1);
}

// |X_j|: within the critical band R6, the a3-cosets of valuation r2-a split
// by the valuation r2+j attained by p^r2 - alpha*a3.  X_0 loses the two
// residue classes 0 and -1, hence the factor 2.
inline BigInt xj_size(const ValuationProfile& pr, unsigned r2, unsigned r3, unsigned j) {
    if (region_of(pr, r3, r2) != RegionTag::R6) throw std::domain_error("xj_size: (r3, r2) not in region R6");
    const unsigned k = r3 + pr.a() - r2;  // >= 1 inside R6
    if (j > k) throw std::domain_error("xj_size: j outside [0, r3-r2+a]");
    const BigInt& p = pr.p();
    if (j == 0) return ipow(p, k) - 2 * ipow(p, k - 1);
    const long d = static_cast<long>(k) - static_cast<long>(j);
    return pow_floor(p, d) - pow_floor(p, d - 1);
}

// One summand of E(r2, r3): coeff * sum_{r1 >= r1_min} x^r1.
struct ETerm {
    BigInt coeff;
    unsigned r1_min = 0;

    friend bool operator==(const ETerm&, const ETerm&) = default;
};

using ETermList = std::vector<ETerm>;

namespace detail {

inline unsigned min3(unsigned x, unsigned y, unsigned z) { return std::min(x, std::min(y, z)); }

inline ETermList normalize_terms(ETermList raw) {
    std::sort(raw.begin(), raw.end(),
              [](const ETerm& s, const ETerm& t) { return s.r1_min < t.r1_min; });
    ETermList out;
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().r1_min == t.r1_min)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    return out;
}

}  // namespace detail

// E(r2, r3) in finite normal form.  Empty index ranges simply contribute no
// terms; zero coefficients are dropped and equal thresholds merged, so the
// result is sorted by r1_min with strictly positive coefficients.
inline ETermList e_terms(const ValuationProfile& pr, unsigned r2, unsigned r3) {
    const BigInt& p = pr.p();
    const unsigned a = pr.a(), c = pr.c();
    const unsigned m = r3 > c ? r3 - c : 0;
    ETermList raw;
    switch (region_of(pr, r3, r2)) {
        case RegionTag::Zero:
            break;
        case RegionTag::R1:
            raw.push_back({ipow(p, 2 * a + c), 2 * a});
            break;
        case RegionTag::R2:
            raw.push_back({ipow(p, r2 + a), r2 - c + a});
            break;
        case RegionTag::R3:
            for (unsigned i = m; i < a; ++i) raw.push_back({ipow(p, a + i) * sbar_size(pr, r2, r3, i), a + i});
            raw.push_back({ipow(p, a + r3), 2 * a});
            break;
        case RegionTag::R4:
            for (unsigned i = 0; i <= r3; ++i) raw.push_back({ipow(p, a + i) * sbar_size(pr, r2, r3, i), a + i});
            break;
        case RegionTag::R5:
            raw.push_back({ipow(p, r2 + r3), r2});
            break;
        case RegionTag::R6: {
            const unsigned k = r3 + a - r2;
            for (unsigned i = m; i + a < r2; ++i) {
                const unsigned li = detail::min3(a + i, 2 * a, r3 + a);
                raw.push_back({ipow(p, li) * sbar_size(pr, r2, r3, i), li});
            }
            for (unsigned j = 0; j <= k; ++j) {
                const unsigned mj = detail::min3(r2 + j, 2 * a, r3 + a);
                raw.push_back({ipow(p, mj) * xj_size(pr, r2, r3, j), mj});
            }
            const unsigned nn = detail::min3(r2, 2 * a, r3 + a);
            raw.push_back({ipow(p, nn + k - 1), nn});
            break;
        }
    }
    return detail::normalize_terms(std::move(raw));
}

// Number of ideals of the given type: the E-terms whose threshold admits r1.
inline BigInt count_type(const ValuationProfile& pr, const IdealType& t) {
    BigInt total = 0;
    for (const auto& term : e_terms(pr, t.r2, t.r3))
        if (term.r1_min <= t.r1) total += term.coeff;
    return total;
}

// coeff * x^xshift / (1-x)^denom_deg.
struct GeomTerm {
    BigInt coeff;
    unsigned xshift = 0;
    unsigned denom_deg = 3;
};

// The full (r3, r2) double sum collapsed to finitely many geometric terms.
// Infinite directions (r1 always; r3 on R1 and R2; r2 on R1, R3, R4) become
// x^L/(1-x) factors anchored at the region boundary; the remaining
// directions are explicit loops bounded by a and c.  E is constant along
// every direction summed geometrically, so one representative cell per
// loop iteration supplies the term list.
inline std::vector<GeomTerm> geometric_terms(const ValuationProfile& pr) {
    const unsigned a = pr.a(), c = pr.c();
    std::vector<GeomTerm> out;
    auto emit = [&](unsigned r2, unsigned r3, unsigned shift, unsigned denom_deg) {
        for (const auto& t : e_terms(pr, r2, r3)) out.push_back({t.coeff, shift + t.r1_min, denom_deg});
    };
    // R1: r2 and r3 both geometric from a+c
    emit(a + c, a + c, 2 * (a + c), 3);
    // R2: r2 in [c, a+c), r3 geometric from r2+1
    for (unsigned r2 = c; r2 < a + c; ++r2) emit(r2, r2 + 1, 2 * r2 + 1, 2);
    // R3: r3 in [a, a+c), r2 geometric from r3+a
    for (unsigned r3 = a; r3 < a + c; ++r3) emit(r3 + a, r3, 2 * r3 + a, 2);
    // R4: r3 in [0, a), r2 geometric from a+r3
    for (unsigned r3 = 0; r3 < a; ++r3) emit(a + r3, r3, 2 * r3 + a, 2);
    // R5: finite triangle
    for (unsigned r3 = 0; r3 < a; ++r3)
        for (unsigned r2 = r3; r2 < a; ++r2) emit(r2, r3, r2 + r3, 1);
    // R6: finite band
    for (unsigned r3 = 0; r3 < a + c; ++r3)
        for (unsigned r2 = std::max(a, r3); r2 < a + r3; ++r2) emit(r2, r3, r2 + r3, 1);
    return out;
}

// N(x) with zeta_R(s) = N(x)/(1-x)^3: each geometric term of denominator
// degree d picks up the cofactor (1-x)^(3-d).
inline IntPoly local_numerator(const ValuationProfile& pr) {
    IntPoly n;
    for (const auto& g : geometric_terms(pr))
        n = n + IntPoly::monomial(g.coeff, g.xshift) * pow_one_minus_x(3 - g.denom_deg);
    return n;
}

// The local factor delta_p(x) itself.  The canonical local denominator is
// exactly (1-x)^3, so this coincides with the numerator.
inline IntPoly delta(const ValuationProfile& pr) { return local_numerator(pr); }

// Independent truncated count: sum of count_type over all types of weight k,
// for k = 0..kmax.
inline SeriesPrefix type_count_prefix(const ValuationProfile& pr, unsigned kmax) {
    SeriesPrefix s(kmax + 1, BigInt(0));
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned r3 = 0; r3 <= k; ++r3)
            for (unsigned r2 = 0; r2 + r3 <= k; ++r2) s[k] += count_type(pr, {k - r2 - r3, r2, r3});
    return s;
}

// Cross-check of the closed-form assembly against the per-type counts, to
// x^(2(2a+c)+6).  Runs in verification mode (tests, `verify`), not on the
// normal computation path.
inline void check_local_numerator(const ValuationProfile& pr) {
    const unsigned kmax = 2 * (2 * pr.a() + pr.c()) + 6;
    const SeriesPrefix series = expand_over_cube(local_numerator(pr), kmax);
    const SeriesPrefix direct = type_count_prefix(pr, kmax);
    if (series != direct)
        throw InternalError("local numerator disagrees with type-by-type counts for (p=" + pr.p().str() +
                            ", a=" + std::to_string(pr.a()) + ", c=" + std::to_string(pr.c()) + ")");
}

}  // namespace izeta
