#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <eisen/criteria.hpp>
#include <eisen/polynomial.hpp>

namespace eisen {

/// Ground-truth factorization by Kronecker's interpolation method. Elementary
/// and exact, so verdicts can be audited against it; the explicit limits make
/// the combinatorial blowup a visible failure mode instead of a hang.
struct oracle_limits {
    int max_degree = 8;
    integer max_abs_coeff{1000000000000LL};
    std::uint64_t tuple_budget = 1000000;  // divisor tuples per search stage
};

struct factor_entry {
    polynomial factor;  // primitive, irreducible, positive leading coefficient
    int multiplicity = 1;
};

struct factorization_result {
    int sign = 1;
    integer content{1};
    std::vector<factor_entry> factors;  // canonical order: degree, then coefficients
    int input_degree = 0;

    int nonconstant_factor_count() const {
        int n = 0;
        for (const auto& e : factors) n += e.multiplicity;
        return n;
    }
    bool is_irreducible() const { return nonconstant_factor_count() == 1; }
};

/// A factorization, or a stated reason the oracle gave up. Giving up never
/// means "irreducible".
struct oracle_result {
    std::optional<factorization_result> factorization;
    std::string inapplicable_reason;
    bool applicable() const { return factorization.has_value(); }
};

struct divisor_enumeration_error : std::runtime_error {
    explicit divisor_enumeration_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline constexpr std::int64_t oracle_trial_bound = 1000000;

/// Full prime factorization by trial division plus a primality test on the
/// cofactor; nullopt when an unfactorable composite remains.
inline std::optional<std::vector<std::pair<integer, unsigned>>> factor_integer(integer v) {
    std::vector<std::pair<integer, unsigned>> out;
    const auto strip = [&](const integer& d) {
        unsigned e = 0;
        while (divides(d, v)) {
            v /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    };
    strip(2);
    for (integer d = 3; d <= oracle_trial_bound && d * d <= v; d += 2) strip(d);
    if (v > 1) {
        if (!is_probable_prime(v)) return std::nullopt;
        out.emplace_back(v, 1);
    }
    return out;
}

/// All divisors of v != 0, both signs, ordered |d| ascending with the
/// positive one first: 1, -1, 2, -2, ...
inline std::vector<integer> signed_divisors(const integer& v) {
    auto fact = factor_integer(abs(v));
    if (!fact)
        throw divisor_enumeration_error("cannot enumerate divisors of " + integer(abs(v)).str() +
                                        ": unfactored composite cofactor");
    std::vector<integer> divs{1};
    for (const auto& [p, e] : *fact) {
        const std::size_t n = divs.size();
        integer pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<integer> out;
    out.reserve(divs.size() * 2);
    for (const auto& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

inline std::vector<integer> evaluation_points(std::size_t count) {
    std::vector<integer> pts;
    pts.reserve(count);
    integer t = 0;
    pts.push_back(t);
    for (integer m = 1; pts.size() < count; ++m) {
        pts.push_back(m);
        if (pts.size() < count) pts.push_back(-m);
    }
    return pts;
}

/// Lagrange basis polynomials over the given points, as rational coefficient
/// vectors ascending by power.
inline std::vector<std::vector<rational>> lagrange_basis(const std::vector<integer>& pts) {
    const std::size_t m = pts.size();
    std::vector<std::vector<rational>> basis;
    basis.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<rational> poly{rational(1)};
        rational denom(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<rational> next(poly.size() + 1);
            for (std::size_t t = 0; t < poly.size(); ++t) {
                next[t] += poly[t] * rational(-pts[j]);
                next[t + 1] += poly[t];
            }
            poly = std::move(next);
            denom *= rational(pts[i] - pts[j]);
        }
        for (auto& c : poly) c /= denom;
        basis.push_back(std::move(poly));
    }
    return basis;
}

struct stage_outcome {
    std::optional<polynomial> factor;
    bool budget_exceeded = false;
};

/// Search for a degree-d factor of work: evaluate at d+1 small points,
/// enumerate signed divisor tuples of the values in lexicographic order,
/// interpolate each candidate and test exact divisibility. Deterministic.
inline stage_outcome find_factor_of_degree(const polynomial& work, int d,
                                           std::uint64_t tuple_budget) {
    const std::size_t m = static_cast<std::size_t>(d) + 1;
    const std::vector<integer> pts = evaluation_points(m);
    std::vector<std::vector<integer>> divs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const integer v = evaluate(work, pts[i]);
        if (v == 0) throw std::logic_error("oracle saw an unexpected integer root");
        divs[i] = signed_divisors(v);
    }
    const auto basis = lagrange_basis(pts);

    // partial[i] = sum of w_j * basis_j over j <= i for the current tuple
    std::vector<std::vector<rational>> partial(m, std::vector<rational>(m));
    std::vector<std::size_t> idx(m, 0);
    const auto refresh = [&](std::size_t from) {
        for (std::size_t i = from; i < m; ++i) {
            const rational w(divs[i][idx[i]]);
            for (std::size_t t = 0; t < m; ++t) {
                rational term = basis[i][t] * w;
                partial[i][t] = i == 0 ? term : partial[i - 1][t] + term;
            }
        }
    };
    refresh(0);

    std::uint64_t tuples = 0;
    for (;;) {
        if (++tuples > tuple_budget) return {std::nullopt, true};

        const std::vector<rational>& cand = partial[m - 1];
        bool integral = true;
        for (const auto& c : cand)
            if (denominator(c) != 1) {
                integral = false;
                break;
            }
        if (integral) {
            std::vector<integer> coeffs;
            coeffs.reserve(m);
            for (const auto& c : cand) coeffs.push_back(numerator(c));
            polynomial g(std::move(coeffs));
            if (g.degree() >= 1 && divides(g.leading(), work.leading()) &&
                try_divide_exact(work, g)) {
                if (g.leading() < 0) g = -g;
                return {std::move(g), false};
            }
        }

        // odometer, rightmost coordinate fastest
        std::size_t level = m;
        while (level-- > 0) {
            if (++idx[level] < divs[level].size()) {
                for (std::size_t i = level + 1; i < m; ++i) idx[i] = 0;
                refresh(level);
                break;
            }
            if (level == 0) return {std::nullopt, false};
        }
    }
}

inline polynomial reconstruct(const factorization_result& r) {
    polynomial acc{integer(r.sign) * r.content};
    for (const auto& e : r.factors)
        for (int i = 0; i < e.multiplicity; ++i) acc = acc * e.factor;
    return acc;
}

}  // namespace detail

/// All rational roots of f, ascending, found by divisor enumeration of the
/// constant and leading coefficients and confirmed by exact evaluation.
inline std::vector<rational> rational_roots(const polynomial& f) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.constant() == 0) throw zero_constant_term_error();
    std::vector<rational> roots;
    if (f.degree() < 1) return roots;
    const std::vector<integer> nums = detail::signed_divisors(f.constant());
    const std::vector<integer> dens = detail::signed_divisors(f.leading());
    for (const integer& den : dens) {
        if (den <= 0) continue;
        for (const integer& num : nums) {
            if (gcd(abs(num), den) != 1) continue;
            // f(num/den) * den^n == 0, computed in integers
            integer acc = 0;
            for (int i = f.degree(); i >= 0; --i)
                acc = acc * num + f.coefficient(static_cast<std::size_t>(i)) *
                                      int_pow(den, static_cast<unsigned>(f.degree() - i));
            if (acc == 0) roots.emplace_back(num, den);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Factor f completely into irreducible primitive factors, Kronecker style:
/// strip rational roots as linear factors, then search degree d = 2, 3, ...
/// up to half the remaining degree. Requires a nonzero constant term; callers
/// strip powers of x first (factor_polynomial does). The returned
/// factorization is verified by exact reconstruction before it is returned.
inline oracle_result kronecker_factor(const polynomial& f, const oracle_limits& limits = {}) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.degree() < 1) throw degree_too_small_error("factoring needs degree >= 1");
    if (f.constant() == 0) throw zero_constant_term_error();
    if (f.degree() > limits.max_degree)
        return {std::nullopt, "degree " + std::to_string(f.degree()) + " exceeds oracle limit " +
                                  std::to_string(limits.max_degree)};
    for (const auto& c : f.coefficients())
        if (abs(c) > limits.max_abs_coeff)
            return {std::nullopt, "coefficient " + c.str() + " exceeds oracle limit"};

    factorization_result res;
    res.input_degree = f.degree();
    res.sign = f.leading() < 0 ? -1 : 1;
    res.content = content(f);
    std::vector<integer> normalized(f.coefficients());
    for (auto& c : normalized) c /= res.sign * res.content;
    polynomial work(std::move(normalized));

    try {
        for (const rational& r : rational_roots(work)) {
            const polynomial g{-numerator(r), denominator(r)};
            int mult = 0;
            while (auto q = try_divide_exact(work, g)) {
                work = std::move(*q);
                ++mult;
            }
            res.factors.push_back({g, mult});
        }
        for (int d = 2; 2 * d <= work.degree();) {
            auto stage = detail::find_factor_of_degree(work, d, limits.tuple_budget);
            if (stage.budget_exceeded)
                return {std::nullopt, "divisor tuple budget " +
                                          std::to_string(limits.tuple_budget) +
                                          " exhausted searching degree " + std::to_string(d)};
            if (!stage.factor) {
                ++d;
                continue;
            }
            int mult = 0;
            while (auto q = try_divide_exact(work, *stage.factor)) {
                work = std::move(*q);
                ++mult;
            }
            res.factors.push_back({std::move(*stage.factor), mult});
        }
    } catch (const divisor_enumeration_error& e) {
        return {std::nullopt, e.what()};
    }
    if (work.degree() >= 1) res.factors.push_back({std::move(work), 1});

    std::sort(res.factors.begin(), res.factors.end(),
              [](const factor_entry& a, const factor_entry& b) {
                  return canonical_less(a.factor, b.factor);
              });

    if (!(detail::reconstruct(res) == f))
        throw std::logic_error("oracle reconstruction failed for " + to_string(f));
    int degree_sum = 0;
    for (const auto& e : res.factors) degree_sum += e.multiplicity * e.factor.degree();
    if (degree_sum != res.input_degree)
        throw std::logic_error("oracle factor degrees do not sum to the input degree");
    return {std::move(res), ""};
}

/// kronecker_factor with powers of x stripped first and recorded as factors.
inline oracle_result factor_polynomial(const polynomial& f, const oracle_limits& limits = {}) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.degree() < 1) throw degree_too_small_error("factoring needs degree >= 1");
    int m = 0;
    while (f.coefficient(static_cast<std::size_t>(m)) == 0) ++m;
    if (m == 0) return kronecker_factor(f, limits);

    std::vector<integer> rest_coeffs(f.coefficients().begin() + m, f.coefficients().end());
    polynomial rest(std::move(rest_coeffs));
    factorization_result res;
    res.input_degree = f.degree();
    if (rest.degree() >= 1) {
        auto inner = kronecker_factor(rest, limits);
        if (!inner.applicable()) return inner;
        res = std::move(*inner.factorization);
        res.input_degree = f.degree();
    } else {
        res.sign = rest.leading() < 0 ? -1 : 1;
        res.content = abs(rest.leading());
    }
    res.factors.push_back({polynomial{0, 1}, m});
    std::sort(res.factors.begin(), res.factors.end(),
              [](const factor_entry& a, const factor_entry& b) {
                  return canonical_less(a.factor, b.factor);
              });
    if (!(detail::reconstruct(res) == f))
        throw std::logic_error("oracle reconstruction failed for " + to_string(f));
    return {std::move(res), ""};
}

enum class verification_status { consistent, contradiction, oracle_inapplicable };

struct verification_outcome {
    verification_status status;
    std::string details;
};

/// Cross-check a criterion verdict against the oracle. Irreducible verdicts
/// demand that no factorization exists; dichotomy verdicts demand either
/// irreducibility or exactly two equal-degree factors that are Eisenstein at
/// the witness prime (after undoing the verdict's shift); inconclusive
/// verdicts claim nothing and are always consistent.
inline verification_outcome verify_verdict(const polynomial& f, const criterion_verdict& v,
                                           const oracle_limits& limits = {}) {
    if (v.kind == verdict_kind::inconclusive)
        return {verification_status::consistent, "no claim was made"};

    const oracle_result r = factor_polynomial(f, limits);
    if (!r.applicable()) return {verification_status::oracle_inapplicable, r.inapplicable_reason};
    const factorization_result& fact = *r.factorization;

    const auto describe = [&] {
        std::string s = "oracle factorization:";
        for (const auto& e : fact.factors) {
            s += " (" + to_string(e.factor) + ")";
            if (e.multiplicity > 1) s += "^" + std::to_string(e.multiplicity);
        }
        return s;
    };

    if (v.kind == verdict_kind::irreducible) {
        if (fact.is_irreducible()) return {verification_status::consistent, "no factorization"};
        return {verification_status::contradiction,
                "claimed irreducible but " + describe()};
    }

    // dichotomy: irreducible, or two equal-degree Eisenstein halves
    if (!v.witness_prime)
        throw std::invalid_argument("dichotomy verdict without a witness prime");
    if (fact.is_irreducible())
        return {verification_status::consistent, "irreducible branch"};
    if (fact.nonconstant_factor_count() != 2)
        return {verification_status::contradiction,
                "dichotomy claimed but " + describe()};
    std::vector<polynomial> halves;
    for (const auto& e : fact.factors)
        for (int i = 0; i < e.multiplicity; ++i) halves.push_back(e.factor);
    if (halves[0].degree() != halves[1].degree() || 2 * halves[0].degree() != f.degree())
        return {verification_status::contradiction,
                "factors are not of equal half degree; " + describe()};
    for (const auto& h : halves) {
        const polynomial shifted_back = v.shift == 0 ? h : taylor_shift(h, v.shift);
        if (eisenstein_check(shifted_back, *v.witness_prime).kind != verdict_kind::irreducible)
            return {verification_status::contradiction,
                    "factor " + to_string(h) + " is not Eisenstein at " +
                        v.witness_prime->str() + "; " + describe()};
    }
    return {verification_status::consistent, "two Eisenstein halves: " + describe()};
}

/// Property probe for factorizations of polynomials with p not dividing a_n
/// and p dividing every other coefficient: every non-leading coefficient of
/// every factor must then be divisible by p. A false return on valid input is
/// a bug somewhere, which is exactly what the probe exists to catch.
inline bool check_factor_divisibility(const polynomial& f, const integer& p,
                                      const factorization_result& result) {
    detail::require_checkable(f);
    detail::require_prime(p);
    if (divides(p, f.leading()))
        throw std::invalid_argument("precondition violated: p divides the leading coefficient");
    for (int i = 0; i < f.degree(); ++i)
        if (!divides(p, f.coefficient(static_cast<std::size_t>(i))))
            throw std::invalid_argument("precondition violated: p must divide a_" +
                                        std::to_string(i));
    if (result.nonconstant_factor_count() < 2)
        throw std::invalid_argument("precondition violated: need at least two nonconstant factors");
    if (!(detail::reconstruct(result) == f))
        throw std::invalid_argument("precondition violated: result does not factor f");

    for (const auto& e : result.factors)
        for (int i = 0; i < e.factor.degree(); ++i)
            if (!divides(p, e.factor.coefficient(static_cast<std::size_t>(i)))) return false;
    return true;
}

}  // namespace eisen
