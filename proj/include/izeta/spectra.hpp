#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "local_zeta.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace izeta {

struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpectralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    BigInt& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix z(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const BigInt& v = x.at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < x.n_; ++j) z.at(i, j) += v * y.at(k, j);
            }
        return z;
    }

    IntMatrix& add_scaled(const IntMatrix& y, const BigInt& s) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += s * y.e_[i];
        return *this;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<BigInt> e_;
};

enum class MatrixFormat { auto_detect, dense, graph6 };

namespace detail {

inline bool is_g6_byte(unsigned char ch) { return ch >= 63 && ch <= 126; }

}  // namespace detail

// graph6 decoder.  Accepts the optional ">>graph6<<" header; the vertex
// count is one byte (n <= 62), or "~" + 3 bytes, or "~~" + 6 bytes, each
// byte holding a 6-bit group offset by 63.  Edge bits follow in
// column-major upper-triangle order, 6 per byte, most significant first.
inline IntMatrix parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) throw MatrixParseError("graph6: empty input");
    auto val = [&](std::size_t i) -> unsigned long long {
        const auto ch = static_cast<unsigned char>(line[i]);
        if (!detail::is_g6_byte(ch))
            throw MatrixParseError("graph6: byte " + std::to_string(ch) + " at position " + std::to_string(i) +
                                   " outside the printable range 63..126");
        return ch - 63ull;
    };
    std::size_t pos = 0;
    unsigned long long n = 0;
    if (line[0] != '~') {
        n = val(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw MatrixParseError("graph6: truncated vertex count");
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        if (line.size() < 8) throw MatrixParseError("graph6: truncated vertex count");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
    }
    if (n > 4096) throw MatrixParseError("graph6: " + std::to_string(n) + " vertices is beyond this tool's scale");
    const unsigned long long nbits = n * (n - 1) / 2;
    const unsigned long long nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw MatrixParseError("graph6: expected " + std::to_string(nbytes) + " edge bytes, got " +
                               std::to_string(line.size() - pos));
    IntMatrix m(static_cast<std::size_t>(n));
    unsigned long long bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const unsigned b = (val(pos + bit / 6) >> (5 - bit % 6)) & 1u;
            m.at(i, j) = b;
            m.at(j, i) = b;
        }
    return m;
}

inline IntMatrix parse_dense_matrix(std::string_view text) {
    std::vector<std::vector<BigInt>> rows;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find('\n', begin), text.size());
        std::string_view ln = text.substr(begin, end - begin);
        begin = end + 1;
        std::vector<BigInt> row;
        std::size_t i = 0;
        while (i < ln.size()) {
            if (std::isspace(static_cast<unsigned char>(ln[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < ln.size() && !std::isspace(static_cast<unsigned char>(ln[j]))) ++j;
            const std::string tok(ln.substr(i, j - i));
            i = j;
            bool ok = !tok.empty();
            for (std::size_t k = 0; k < tok.size() && ok; ++k)
                ok = std::isdigit(static_cast<unsigned char>(tok[k])) || (k == 0 && (tok[k] == '-' || tok[k] == '+'));
            if (!ok || (tok.size() == 1 && !std::isdigit(static_cast<unsigned char>(tok[0]))))
                throw MatrixParseError("matrix: invalid integer token '" + tok + "'");
            row.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (end == text.size()) break;
    }
    if (rows.empty()) throw MatrixParseError("matrix: no rows");
    const std::size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            throw MatrixParseError("matrix: not square (" + std::to_string(n) + " rows, a row of width " +
                                   std::to_string(row.size()) + ")");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

// Detection: the ">>graph6<<" header wins; otherwise a single non-blank line
// made entirely of bytes 63..126 is graph6 (digits, signs and whitespace all
// live below 63, so dense matrices can never collide).
inline IntMatrix parse_matrix(std::string_view text, MatrixFormat format = MatrixFormat::auto_detect) {
    if (format == MatrixFormat::dense) return parse_dense_matrix(text);
    if (format == MatrixFormat::graph6) return parse_graph6(text);
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.substr(i).substr(0, 10) == ">>graph6<<") return parse_graph6(text.substr(i));
    std::size_t lines = 0;
    bool g6_charset = true;
    std::size_t begin = 0;
    std::string_view candidate;
    while (begin <= text.size() && lines <= 1) {
        const std::size_t end = std::min(text.find('\n', begin), text.size());
        std::string_view ln = text.substr(begin, end - begin);
        while (!ln.empty() && std::isspace(static_cast<unsigned char>(ln.back()))) ln.remove_suffix(1);
        while (!ln.empty() && std::isspace(static_cast<unsigned char>(ln.front()))) ln.remove_prefix(1);
        if (!ln.empty()) {
            ++lines;
            candidate = ln;
            for (const char ch : ln) g6_charset = g6_charset && detail::is_g6_byte(static_cast<unsigned char>(ch));
        }
        if (end == text.size()) break;
        begin = end + 1;
    }
    if (lines == 1 && g6_charset) return parse_graph6(candidate);
    return parse_dense_matrix(text);
}

// Characteristic polynomial det(xI - B) by the Berkowitz iteration:
// division-free, exact, one Toeplitz product per leading principal block.
inline IntPoly char_poly(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<BigInt> p{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<BigInt> t(k + 1);
        t[0] = 1;
        t[1] = -m.at(k - 1, k - 1);
        std::vector<BigInt> w(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) w[i] = m.at(i, k - 1);
        for (std::size_t j = 2; j <= k; ++j) {
            BigInt dot = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) dot += m.at(k - 1, i) * w[i];
            t[j] = -dot;
            if (j == k) break;
            std::vector<BigInt> nw(k - 1);
            for (std::size_t r = 0; r + 1 < k; ++r)
                for (std::size_t c = 0; c + 1 < k; ++c) nw[r] += m.at(r, c) * w[c];
            w = std::move(nw);
        }
        std::vector<BigInt> np(k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= std::min(i, k - 1); ++j) np[i] += t[i - j] * p[j];
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return IntPoly(std::move(p));
}

namespace detail {

// Solve sum_{i<d} x_i * flat(P_i) = flat(P_d) exactly, by fraction-free
// (Bareiss) elimination on the n^2 x (d+1) augmented system.  Returns
// nullopt when inconsistent.  The powers I, B, ..., B^{d-1} are linearly
// independent whenever the system is consistent, so every column pivots and
// the unique solution is integral (a monic divisor of a monic integer
// polynomial is integral).
inline std::optional<std::vector<BigInt>> power_dependence(const std::vector<IntMatrix>& pw) {
    const std::size_t d = pw.size() - 1;
    const std::size_t n = pw[0].size();
    const std::size_t m = n * n;
    std::vector<std::vector<BigInt>> rows(m, std::vector<BigInt>(d + 1));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= d; ++i) rows[r][i] = pw[i].at(r / n, r % n);
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = rank;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) throw InternalError("power_dependence: powers below the minimal degree are dependent");
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            for (std::size_t cc = col + 1; cc <= d; ++cc)
                rows[r][cc] = (rows[rank][col] * rows[r][cc] - rows[r][col] * rows[rank][cc]) / prev;
            rows[r][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (rows[r][d] != 0) return std::nullopt;
    std::vector<BigInt> x(d);
    for (std::size_t i = d; i-- > 0;) {
        BigInt acc = rows[i][d];
        for (std::size_t j = i + 1; j < d; ++j) acc -= rows[i][j] * x[j];
        if (acc % rows[i][i] != 0) throw InternalError("power_dependence: non-integral dependence coefficient");
        x[i] = acc / rows[i][i];
    }
    return x;
}

inline IntMatrix eval_at(const IntPoly& f, const IntMatrix& b) {
    IntMatrix acc(b.size());
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * b;
        acc.add_scaled(IntMatrix::identity(b.size()), f.coeff(k));
    }
    return acc;
}

}  // namespace detail

// Least-degree monic integer polynomial annihilating m, by exact
// linear-dependence search over I, B, B^2, ...  Verified by evaluation.
inline IntPoly min_poly(const IntMatrix& m) {
    if (m.size() == 0) throw std::invalid_argument("min_poly: empty matrix");
    std::vector<IntMatrix> pw{IntMatrix::identity(m.size())};
    for (std::size_t d = 1; d <= m.size(); ++d) {
        pw.push_back(pw.back() * m);
        if (auto dep = detail::power_dependence(pw)) {
            std::vector<BigInt> c = std::move(*dep);
            for (auto& ci : c) ci = -ci;
            c.push_back(1);
            IntPoly mp(std::move(c));
            if (!detail::eval_at(mp, m).is_zero())
                throw InternalError("min_poly: computed polynomial fails to annihilate the matrix");
            return mp;
        }
    }
    throw InternalError("min_poly: no dependence found up to the matrix dimension");
}

struct SpectrumReport {
    IntPoly char_polynomial;
    IntPoly min_polynomial;
    std::array<BigInt, 3> eigenvalues;       // ascending
    BigInt alpha, beta;                      // the ring Z[x]/x(x-alpha)(x-beta)
    std::vector<BigInt> bad_primes;          // ascending
    std::vector<ValuationProfile> profiles;  // one per bad prime, same order
};

namespace detail {

// One integer root of f (monic over Z), or nullopt.  Candidates are 0 and
// the signed divisors of the constant term.
inline std::optional<BigInt> integer_root(const IntPoly& f) {
    if (f.coeff(0) == 0) return BigInt(0);
    for (const BigInt& d : divisors(f.coeff(0))) {
        if (f(d) == 0) return d;
        if (f(-d) == 0) return -d;
    }
    return std::nullopt;
}

}  // namespace detail

// Validate the three-distinct-integer-eigenvalue hypothesis and emit the
// shifted pair plus one valuation profile per bad prime.  No shifted
// polynomial is ever constructed: profiles depend only on the pairwise
// eigenvalue differences, which translation cannot change.
inline SpectrumReport analyze(const IntMatrix& m) {
    SpectrumReport rep{char_poly(m), min_poly(m), {}, 0, 0, {}, {}};
    if (rep.min_polynomial.degree() != 3)
        throw SpectralError("not a three-eigenvalue matrix (minimal polynomial has degree " +
                            std::to_string(rep.min_polynomial.degree()) + ")");
    std::vector<BigInt> roots;
    IntPoly g = rep.min_polynomial;
    for (int i = 0; i < 3; ++i) {
        const auto r = detail::integer_root(g);
        if (!r) throw SpectralError("non-integral spectrum");
        roots.push_back(*r);
        const auto q = divide_exact(g, IntPoly{-*r, 1});
        if (!q) throw InternalError("analyze: verified root fails to divide");
        g = *q;
    }
    std::sort(roots.begin(), roots.end());
    if (roots[0] == roots[1] || roots[1] == roots[2])
        throw SpectralError("not a three-eigenvalue matrix (repeated eigenvalue)");
    rep.eigenvalues = {roots[0], roots[1], roots[2]};
    rep.alpha = roots[1] - roots[0];
    rep.beta = roots[2] - roots[0];
    rep.bad_primes.clear();
    for (const auto& pp : factor(rep.alpha * rep.beta * (rep.beta - rep.alpha))) rep.bad_primes.push_back(pp.prime);
    for (const BigInt& p : rep.bad_primes) rep.profiles.push_back(realize_profile(p, rep.alpha, rep.beta));
    return rep;
}

}  // namespace izeta
