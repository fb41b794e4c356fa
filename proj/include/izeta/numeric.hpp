#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace izeta {

// All integer arithmetic in this library is exact.  Coefficients grow like
// p^(2(2a+c)), which leaves 64-bit range quickly.
using BigInt = boost::multiprecision::cpp_int;

// Raised when a structural invariant that should be unreachable fails
// (region partition violation, closed form vs. type-count mismatch, ...).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// p-adic valuation: a natural number, or +infinity (the valuation of 0).
class Valuation {
public:
    explicit Valuation(unsigned long v) : v_(v) {}

    static Valuation infinity() {
        Valuation v(0);
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }

    unsigned long value() const {
        if (inf_) throw InternalError("Valuation::value: valuation is +infinity");
        return v_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;

    friend bool operator<(const Valuation& x, const Valuation& y) {
        if (x.inf_) return false;
        return y.inf_ || x.v_ < y.v_;
    }

private:
    unsigned long v_;
    bool inf_ = false;
};

// Largest e with p^e | n; vp(0) = +infinity.
inline Valuation vp(const BigInt& n, const BigInt& p) {
    if (p < 2) throw std::invalid_argument("vp: p must be a prime >= 2");
    if (n == 0) return Valuation::infinity();
    BigInt m = abs(n);
    unsigned long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return Valuation(e);
}

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial-division factorization of |n|, ascending primes.  Inputs here are
// small determinant products, never cryptographic scale.
inline std::vector<PrimePower> factor(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factor: 0 has no factorization");
    std::vector<PrimePower> out;
    BigInt m = abs(n);
    auto strip = [&](const BigInt& d) {
        if (m % d != 0) return;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.push_back({d, e});
    };
    strip(2);
    strip(3);
    for (BigInt d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// p^t for t >= 0, else 0: the floor convention that closes the i = r3
// boundary case of the coset-size formula.
inline BigInt pow_floor(const BigInt& p, long t) {
    if (t < 0) return 0;
    return ipow(p, static_cast<unsigned long>(t));
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (BigInt d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

// Positive divisors of |n|, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{1};
    for (const auto& pp : factor(n)) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace izeta
