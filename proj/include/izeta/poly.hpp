#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace izeta {

// Dense univariate polynomial over Z in x = p^{-s}.  Coefficients are stored
// ascending; the zero polynomial is the empty vector, so the trailing
// coefficient is always nonzero.
class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::initializer_list<BigInt> ascending) : c_(ascending) { normalize(); }

    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }

    static IntPoly monomial(BigInt coeff, unsigned degree) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(std::size_t k) const {
        static const BigInt zero = 0;
        return k < c_.size() ? c_[k] : zero;
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& f, const IntPoly& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] -= g.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<BigInt> c(f.c_.size() + g.c_.size() - 1);
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const BigInt& s, const IntPoly& f) {
        std::vector<BigInt> c = f.c_;
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// (1 - x)^k.
inline IntPoly pow_one_minus_x(unsigned k) {
    IntPoly f{1};
    const IntPoly base{1, -1};
    for (unsigned i = 0; i < k; ++i) f = f * base;
    return f;
}

// Exact quotient f / g when g divides f, otherwise nullopt.  Requires the
// leading coefficient divisions to be exact as well (always true for the
// monic divisors used here).
inline std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<BigInt> rem = f.coeffs();
    const int dq = f.degree() - g.degree();
    std::vector<BigInt> q(dq + 1);
    const BigInt& lead = g.coeff(g.degree());
    for (int k = dq; k >= 0; --k) {
        const BigInt& top = rem[k + g.degree()];
        if (top % lead != 0) return std::nullopt;
        q[k] = top / lead;
        for (int j = 0; j <= g.degree(); ++j) rem[k + j] -= q[k] * g.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

// First K+1 coefficients of the power series f(x) / (1-x)^3.  The expansion
// of (1-x)^{-3} has coefficients T_m = (m+1)(m+2)/2.
using SeriesPrefix = std::vector<BigInt>;

inline SeriesPrefix expand_over_cube(const IntPoly& f, unsigned kmax) {
    SeriesPrefix out(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < f.coeffs().size() && j <= k; ++j) {
            const BigInt m = k - j;
            acc += f.coeffs()[j] * ((m + 1) * (m + 2) / 2);
        }
        out[k] = std::move(acc);
    }
    return out;
}

enum class PolyStyle { text, latex, json };

// Deterministic rendering, descending degree for text/latex, ascending
// coefficient array for json.
inline std::string render(const IntPoly& f, PolyStyle style) {
    if (style == PolyStyle::json) {
        std::ostringstream os;
        os << "{\"coeffs\":[";
        for (int k = 0; k <= f.degree(); ++k) os << (k ? "," : "") << f.coeff(k);
        if (f.is_zero()) os << "0";
        os << "]}";
        return os.str();
    }
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const BigInt& c = f.coeff(k);
        if (c == 0) continue;
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        const BigInt mag = abs(c);
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) {
            os << "x";
            if (k >= 2) {
                if (style == PolyStyle::latex)
                    os << "^{" << k << "}";
                else
                    os << "^" << k;
            }
        }
    }
    return os.str();
}

}  // namespace izeta
