#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "local_zeta.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace izeta {

// Number of ordered triples (u, v, w) with uvw = n: the coefficient of
// n^{-s} in zeta(s)^3.  Multiplicative, d3(p^k) = (k+1)(k+2)/2.
inline BigInt d3(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("d3: n must be >= 1");
    BigInt out = 1;
    for (const auto& pp : factor(n)) {
        const BigInt k = pp.exponent;
        out *= (k + 1) * (k + 2) / 2;
    }
    return out;
}

struct LocalFactor {
    ValuationProfile profile;
    IntPoly delta_poly;
    SeriesPrefix coeffs;  // a_{p^k} for k = 0..floor(log_p N)
};

struct DirichletTable {
    std::uint64_t limit = 0;
    std::vector<BigInt> a;          // a[n] for n in [1, limit]; a[0] unused
    std::vector<LocalFactor> local; // ascending prime order
};

// Global coefficients a_1..a_N of prod_p delta_p(p^{-s}) * zeta(s)^3:
// per-prime local arrays first, then one multiplicative pass.
inline DirichletTable assemble(std::vector<ValuationProfile> profiles, std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("assemble: limit must be >= 1");
    std::sort(profiles.begin(), profiles.end(),
              [](const ValuationProfile& x, const ValuationProfile& y) { return x.p() < y.p(); });
    for (std::size_t i = 1; i < profiles.size(); ++i)
        if (profiles[i - 1].p() == profiles[i].p())
            throw std::invalid_argument("assemble: duplicate profile for p = " + profiles[i].p().str());
    DirichletTable t;
    t.limit = limit;
    for (const auto& pr : profiles) {
        unsigned kmax = 0;
        BigInt pk = 1;
        while (pk * pr.p() <= limit) {
            pk *= pr.p();
            ++kmax;
        }
        IntPoly d = delta(pr);
        SeriesPrefix coeffs = expand_over_cube(d, kmax);
        t.local.push_back({pr, std::move(d), std::move(coeffs)});
    }
    t.a.assign(static_cast<std::size_t>(limit) + 1, BigInt(0));
    for (std::uint64_t n = 1; n <= limit; ++n) {
        BigInt m = n;
        BigInt an = 1;
        for (const auto& lf : t.local) {
            unsigned e = 0;
            while (m % lf.profile.p() == 0) {
                m /= lf.profile.p();
                ++e;
            }
            an *= lf.coeffs[e];
        }
        an *= d3(m);
        t.a[static_cast<std::size_t>(n)] = std::move(an);
    }
    return t;
}

namespace detail {

inline bool power_of(const BigInt& p, const BigInt& v, unsigned long& j) {
    BigInt m = v;
    j = 0;
    while (m % p == 0) {
        m /= p;
        ++j;
    }
    return m == 1 && j >= 1;
}

}  // namespace detail

// delta_p as a Dirichlet factor in s: c*x^k prints as c*p^{-ks}, with powers
// of p folded into the exponent ("p^{1-2s}" for the coefficient p at x^2).
inline std::string dirichlet_factor_string(const IntPoly& f, const BigInt& p) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= f.degree(); ++k) {
        const BigInt& c = f.coeff(k);
        if (c == 0) continue;
        os << (c < 0 ? "-" : first ? "" : "+");
        first = false;
        const BigInt mag = abs(c);
        if (k == 0) {
            os << mag;
            continue;
        }
        const std::string expo = k == 1 ? "-s" : "-" + std::to_string(k) + "s";
        unsigned long j = 0;
        if (mag == 1)
            os << p << "^{" << expo << "}";
        else if (detail::power_of(p, mag, j))
            os << p << "^{" << j << expo << "}";
        else
            os << mag << "·" << p << "^{" << expo << "}";
    }
    return os.str();
}

// "prod_p delta_p(p^{-s}) * zeta(s)^3" with every factor explicit.
inline std::string zeta_string(std::vector<ValuationProfile> profiles) {
    std::sort(profiles.begin(), profiles.end(),
              [](const ValuationProfile& x, const ValuationProfile& y) { return x.p() < y.p(); });
    std::string out;
    for (const auto& pr : profiles) out += "(" + dirichlet_factor_string(delta(pr), pr.p()) + ")·";
    return out + "ζ(s)^3";
}

// JSON numbers only while they are faithfully representable; decimal strings
// beyond 2^53.
inline nlohmann::json json_int(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v <= lim && v >= -lim) return static_cast<std::int64_t>(v);
    return v.str();
}

inline nlohmann::json json_coeffs(const IntPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= f.degree(); ++k) arr.push_back(json_int(f.coeff(k)));
    if (f.is_zero()) arr.push_back(0);
    return arr;
}

inline nlohmann::json to_json(const DirichletTable& t) {
    nlohmann::json j;
    j["N"] = t.limit;
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::uint64_t n = 1; n <= t.limit; ++n) coeffs.push_back(json_int(t.a[static_cast<std::size_t>(n)]));
    j["coefficients"] = std::move(coeffs);
    nlohmann::json bad = nlohmann::json::array();
    nlohmann::json deltas = nlohmann::json::object();
    for (const auto& lf : t.local) {
        bad.push_back(json_int(lf.profile.p()));
        deltas[lf.profile.p().str()] = json_coeffs(lf.delta_poly);
    }
    j["bad_primes"] = std::move(bad);
    j["delta"] = std::move(deltas);
    return j;
}

inline std::string to_csv(const DirichletTable& t) {
    std::ostringstream os;
    for (std::uint64_t n = 1; n <= t.limit; ++n) os << n << "," << t.a[static_cast<std::size_t>(n)] << "\n";
    return os.str();
}

}  // namespace izeta
