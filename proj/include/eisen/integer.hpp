#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include <eisen/errors.hpp>

namespace eisen {

using integer  = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bool divides(const integer& d, const integer& a) { return a % d == 0; }

inline integer int_pow(const integer& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

/// Strong probable-prime test. Deterministic for n < 3.3e24 (fixed witness
/// set), Miller-Rabin with the same witnesses above that.
inline bool is_probable_prime(const integer& n) {
    static constexpr int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (int w : witnesses) {
        if (n == w) return true;
        if (divides(integer(w), n)) return false;
    }
    integer d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int w : witnesses) {
        integer x = powm(integer(w), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// p-adic valuation of an integer: the largest e with p^e | a.
/// The valuation of 0 is the distinguished infinite value, which compares
/// greater than every finite valuation.
class valuation {
public:
    explicit valuation(std::uint64_t v) : finite_(true), value_(v) {}
    static valuation infinite() { return valuation(); }

    bool is_infinite() const { return !finite_; }
    std::uint64_t value() const {
        if (!finite_) throw std::logic_error("infinite valuation has no finite value");
        return value_;
    }

    friend bool operator==(const valuation&, const valuation&) = default;
    friend std::strong_ordering operator<=>(const valuation& a, const valuation& b) {
        if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
        return b.finite_ <=> a.finite_;  // infinite sorts last
    }

private:
    valuation() : finite_(false), value_(0) {}
    bool finite_;
    std::uint64_t value_;
};

/// Largest e with p^e | a, sign ignored; infinite for a = 0. Requires p >= 2;
/// primality of p is the caller's business.
inline valuation p_adic_valuation(integer a, const integer& p) {
    if (p < 2) throw invalid_prime_error("p-adic valuation needs p >= 2");
    if (a == 0) return valuation::infinite();
    a = abs(a);
    std::uint64_t e = 0;
    integer q, r;
    for (;;) {
        divide_qr(a, p, q, r);
        if (r != 0) break;
        a = std::move(q);
        ++e;
    }
    return valuation(e);
}

}  // namespace eisen
