#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <eisen/errors.hpp>
#include <eisen/integer.hpp>

namespace eisen {

/// Dense univariate polynomial over Z with exact coefficients, stored
/// ascending by power: coefficient(i) is the coefficient of x^i.
///
/// The zero polynomial is representable (empty coefficient vector, degree -1)
/// but is a degenerate value: criterion and diagram operations reject it with
/// zero_polynomial_error, and multiplication rejects zero operands. Values are
/// immutable after construction and safe to share across threads.
class polynomial {
public:
    polynomial() = default;
    polynomial(std::initializer_list<integer> ascending) : coeffs_(ascending) { trim(); }
    explicit polynomial(std::vector<integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static polynomial x_power(std::size_t n) {
        std::vector<integer> c(n + 1);
        c[n] = 1;
        return polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const integer& coefficient(std::size_t i) const {
        static const integer zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const integer& leading() const {
        if (is_zero()) throw zero_polynomial_error();
        return coeffs_.back();
    }

    const integer& constant() const { return coefficient(0); }

    const std::vector<integer>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const polynomial&, const polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<integer> coeffs_;
};

inline polynomial operator+(const polynomial& f, const polynomial& g) {
    std::vector<integer> c(std::max(f.coefficients().size(), g.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coefficient(i) + g.coefficient(i);
    return polynomial(std::move(c));
}

inline polynomial operator-(const polynomial& f) {
    std::vector<integer> c(f.coefficients());
    for (auto& v : c) v = -v;
    return polynomial(std::move(c));
}

inline polynomial operator-(const polynomial& f, const polynomial& g) { return f + (-g); }

/// Exact convolution product. Zero operands are rejected: the zero polynomial
/// is outside the domain this library works in.
inline polynomial operator*(const polynomial& f, const polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial_error();
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<integer> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return polynomial(std::move(c));
}

/// Horner evaluation, exact.
inline integer evaluate(const polynomial& f, const integer& t) {
    integer acc = 0;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

/// g with g(x) = f(x + c): repeated Horner step in Z[x]. Degree and leading
/// coefficient are preserved.
inline polynomial taylor_shift(const polynomial& f, const integer& c) {
    if (f.is_zero()) throw zero_polynomial_error();
    const auto& a = f.coefficients();
    std::vector<integer> g;  // g <- g*(x+c) + a_i, i descending
    g.reserve(a.size());
    for (std::size_t i = a.size(); i-- > 0;) {
        g.insert(g.begin(), integer(0));
        for (std::size_t j = 0; j + 1 < g.size(); ++j) g[j] += c * g[j + 1];
        g[0] += a[i];
    }
    return polynomial(std::move(g));
}

/// Coefficient reversal x^n f(1/x); trailing zeros of f shorten the result.
inline polynomial reversed(const polynomial& f) {
    std::vector<integer> c(f.coefficients());
    std::reverse(c.begin(), c.end());
    return polynomial(std::move(c));
}

/// gcd of all coefficients, positive; 0 for the zero polynomial.
inline integer content(const polynomial& f) {
    integer g = 0;
    for (const auto& c : f.coefficients()) g = gcd(g, c);
    return g;
}

inline polynomial primitive_part(const polynomial& f) {
    if (f.is_zero()) return f;
    const integer g = content(f);
    std::vector<integer> c(f.coefficients());
    for (auto& v : c) v /= g;
    return polynomial(std::move(c));
}

/// Quotient f / g when g divides f exactly in Z[x], otherwise nullopt.
inline std::optional<polynomial> try_divide_exact(const polynomial& f, const polynomial& g) {
    if (g.is_zero()) throw zero_polynomial_error();
    if (f.is_zero()) return polynomial{};
    const int n = f.degree(), m = g.degree();
    if (n < m) return std::nullopt;
    std::vector<integer> rem(f.coefficients());
    std::vector<integer> q(static_cast<std::size_t>(n - m) + 1);
    const integer& lead = g.leading();
    for (int k = n - m; k >= 0; --k) {
        const integer& head = rem[static_cast<std::size_t>(m + k)];
        if (!divides(lead, head)) return std::nullopt;
        integer qk = head / lead;
        for (int j = 0; j <= m; ++j)
            rem[static_cast<std::size_t>(j + k)] -= qk * g.coefficient(static_cast<std::size_t>(j));
        q[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return polynomial(std::move(q));
}

/// Ordering used wherever factor lists must be reproducible: by degree, then
/// lexicographic on the ascending coefficient vector.
inline bool canonical_less(const polynomial& a, const polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                        b.coefficients().begin(), b.coefficients().end());
}

/// Canonical text form, descending powers: "x^4+5x^3+25x^2+50x+150".
/// Parsing this form reproduces the polynomial exactly.
inline std::string to_string(const polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const integer& c = f.coefficient(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const integer m = abs(c);
        if (i == 0) {
            out += m.str();
        } else {
            if (m != 1) out += m.str();
            out += 'x';
            if (i != 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const polynomial& f) {
    return os << to_string(f);
}

}  // namespace eisen
