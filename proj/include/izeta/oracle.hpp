#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "local_zeta.hpp"
#include "numeric.hpp"

namespace izeta {

// Enumeration refused rather than silently truncated.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// The concrete ring Z[x]/x(x-alpha)(x-beta)Z[x].
class CubicRingSpec {
public:
    CubicRingSpec(BigInt alpha, BigInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (alpha_ == 0 || beta_ == 0 || alpha_ == beta_)
            throw std::invalid_argument("CubicRingSpec: 0, alpha, beta must be pairwise distinct");
    }

    const BigInt& alpha() const { return alpha_; }
    const BigInt& beta() const { return beta_; }

    BigInt bad_prime_product() const { return alpha_ * beta_ * (beta_ - alpha_); }

    std::vector<BigInt> bad_primes() const {
        std::vector<BigInt> out;
        for (const auto& pp : factor(bad_prime_product())) out.push_back(pp.prime);
        return out;
    }

    ValuationProfile profile_at(const BigInt& p) const { return realize_profile(p, alpha_, beta_); }

private:
    BigInt alpha_;
    BigInt beta_;
};

// Lower-triangular lattice basis v1 = (d1, a1, a2), v2 = (0, d2, a3),
// v3 = (0, 0, d3) with off-diagonals reduced: 0 <= a1 < d2, 0 <= a2 < d3,
// 0 <= a3 < d3.  Every full-rank sublattice has exactly one such basis, so
// enumeration over these forms is duplicate-free.
struct HNFBasis {
    BigInt d1, d2, d3;
    BigInt a1, a2, a3;

    BigInt index() const { return d1 * d2 * d3; }
};

// Coordinate basis used for the lattice description.  The shifted-products
// basis {1, x, x(x-alpha)} matches the type parametrization (r1, r2, r3);
// the power basis {1, x, x^2} gives an independent recount of the same
// ideals under the companion-matrix action.
enum class CoordBasis { shifted_products, powers };

// True iff the lattice is an ideal, i.e. closed under multiplication by x.
// The image of (c0, c1, c2) under that action has no constant coordinate,
// so membership reduces to two divisibility checks per basis vector.
inline bool is_ideal(const CubicRingSpec& spec, const HNFBasis& h, CoordBasis basis = CoordBasis::shifted_products) {
    auto contains = [&](const BigInt& w1, const BigInt& w2) {
        if (w1 % h.d2 != 0) return false;
        return (w2 - (w1 / h.d2) * h.a3) % h.d3 == 0;
    };
    auto maps_in = [&](const BigInt& c0, const BigInt& c1, const BigInt& c2) {
        if (basis == CoordBasis::shifted_products)
            // x * (c0 + c1 x + c2 x(x-alpha)) = (c0 + alpha c1) x + (c1 + beta c2) x(x-alpha)
            return contains(c0 + spec.alpha() * c1, c1 + spec.beta() * c2);
        // x^3 = (alpha+beta) x^2 - alpha beta x
        return contains(c0 - spec.alpha() * spec.beta() * c2, c1 + (spec.alpha() + spec.beta()) * c2);
    };
    return maps_in(h.d1, h.a1, h.a2) && maps_in(0, h.d2, h.a3) && maps_in(0, 0, h.d3);
}

// Number of ideals with diagonal (p^r1, p^r2, p^r3), by exhaustive search
// over the p^(r2+2r3) reduced off-diagonal triples.
inline BigInt oracle_count_type(const CubicRingSpec& spec, const BigInt& p, const IdealType& t,
                                std::uint64_t budget = kDefaultEnumerationBudget,
                                CoordBasis basis = CoordBasis::shifted_products) {
    if (!is_prime(p)) throw std::invalid_argument("oracle_count_type: p = " + p.str() + " is not prime");
    const BigInt candidates = ipow(p, t.r2 + 2ul * t.r3);
    if (candidates > budget)
        throw BudgetExceeded("oracle_count_type: " + candidates.str() + " candidate bases for type (" +
                             std::to_string(t.r1) + "," + std::to_string(t.r2) + "," + std::to_string(t.r3) +
                             ") exceed the budget of " + std::to_string(budget));
    HNFBasis h{ipow(p, t.r1), ipow(p, t.r2), ipow(p, t.r3), 0, 0, 0};
    BigInt count = 0;
    for (h.a3 = 0; h.a3 < h.d3; ++h.a3)
        for (h.a1 = 0; h.a1 < h.d2; ++h.a1)
            for (h.a2 = 0; h.a2 < h.d3; ++h.a2)
                if (is_ideal(spec, h, basis)) ++count;
    return count;
}

// a_{p^k} for k = 0..kmax, summed over the types of each weight.
inline std::vector<BigInt> oracle_local_counts(const CubicRingSpec& spec, const BigInt& p, unsigned kmax,
                                               std::uint64_t budget = kDefaultEnumerationBudget,
                                               CoordBasis basis = CoordBasis::shifted_products) {
    if (!is_prime(p)) throw std::invalid_argument("oracle_local_counts: p = " + p.str() + " is not prime");
    BigInt total = 0;
    for (unsigned r3 = 0; r3 <= kmax; ++r3)
        for (unsigned r2 = 0; r2 + r3 <= kmax; ++r2)
            total += BigInt(kmax - r2 - r3 + 1) * ipow(p, r2 + 2ul * r3);
    if (total > budget)
        throw BudgetExceeded("oracle_local_counts: " + total.str() + " candidate bases up to index " + p.str() +
                             "^" + std::to_string(kmax) + " exceed the budget of " + std::to_string(budget));
    std::vector<BigInt> out(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned r3 = 0; r3 <= k; ++r3)
            for (unsigned r2 = 0; r2 + r3 <= k; ++r2)
                out[k] += oracle_count_type(spec, p, {k - r2 - r3, r2, r3}, budget, basis);
    return out;
}

// Number of ideals of index n: all ordered diagonal factorizations
// d1*d2*d3 = n, all reduced off-diagonals.
inline BigInt oracle_global_count(const CubicRingSpec& spec, const BigInt& n,
                                  std::uint64_t budget = kDefaultEnumerationBudget,
                                  CoordBasis basis = CoordBasis::shifted_products) {
    if (n < 1) throw std::invalid_argument("oracle_global_count: n must be >= 1");
    const std::vector<BigInt> divs = divisors(n);
    BigInt cost = 0;
    for (const BigInt& d1 : divs)
        for (const BigInt& d2 : divisors(n / d1)) {
            const BigInt d3 = n / d1 / d2;
            cost += d2 * d3 * d3;
        }
    if (cost > budget)
        throw BudgetExceeded("oracle_global_count: " + cost.str() + " candidate bases at index " + n.str() +
                             " exceed the budget of " + std::to_string(budget));
    BigInt count = 0;
    HNFBasis h;
    for (const BigInt& d1 : divs)
        for (const BigInt& d2 : divisors(n / d1)) {
            h.d1 = d1;
            h.d2 = d2;
            h.d3 = n / d1 / d2;
            for (h.a3 = 0; h.a3 < h.d3; ++h.a3)
                for (h.a1 = 0; h.a1 < h.d2; ++h.a1)
                    for (h.a2 = 0; h.a2 < h.d3; ++h.a2)
                        if (is_ideal(spec, h, basis)) ++count;
        }
    return count;
}

}  // namespace izeta
