#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <eisen/newton.hpp>
#include <eisen/polynomial.hpp>

namespace eisen {

/// Criteria are one-sided: they prove irreducibility (or the k=2 structure
/// dichotomy) and otherwise say nothing. There is no "reducible" verdict.
enum class verdict_kind { irreducible, irreducible_or_two_eisenstein_halves, inconclusive };

enum class criterion_id { eisenstein, reversed_eisenstein, generalized, dumas, k2_structure };

/// Why a check came back inconclusive, as a comparable class; the verdict
/// also carries free text with the offending index/prime power spelled out.
enum class fail_reason {
    leading_divisible,      // p | a_n
    coeff_underdivisible,   // some a_i below the leading one misses the required power
    constant_overdivisible, // the constant term carries too high a power of p
    exponent_not_coprime,   // gcd(k, n) > 1
    multiple_segments,      // Newton diagram has more than one segment
    segment_not_simple,     // the single segment has interior lattice points
};

struct criterion_verdict {
    verdict_kind kind = verdict_kind::inconclusive;
    std::optional<criterion_id> criterion;
    std::optional<integer> witness_prime;
    std::optional<unsigned> k;
    std::optional<int> half_degree;  // n/2, dichotomy verdicts only
    integer shift{0};                // substitution x -> x + shift the verdict was reached under
    std::optional<fail_reason> failure;
    std::string reason;              // populated for inconclusive verdicts
};

namespace detail {

inline void require_checkable(const polynomial& f) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.degree() < 1) throw degree_too_small_error("criteria need degree >= 1");
}

/// Criteria are only sound for prime p, so the checks gate on a primality
/// test rather than trusting the caller.
inline void require_prime(const integer& p) {
    if (p < 2) throw invalid_prime_error("p must be at least 2");
    if (!is_probable_prime(p)) throw invalid_prime_error(p.str() + " is not prime");
}

inline criterion_verdict success(criterion_id c, const integer& p) {
    criterion_verdict v;
    v.kind = verdict_kind::irreducible;
    v.criterion = c;
    v.witness_prime = p;
    return v;
}

inline criterion_verdict failure(criterion_id c, const integer& p, fail_reason why,
                                 std::string text) {
    criterion_verdict v;
    v.kind = verdict_kind::inconclusive;
    v.criterion = c;
    v.witness_prime = p;
    v.failure = why;
    v.reason = std::move(text);
    return v;
}

struct power_condition_failure {
    fail_reason why;
    int index;
};

/// Shared hypothesis check: p does not divide a_n, p^k divides every other
/// coefficient, p^(k+1) does not divide a_0. Returns the first violated
/// condition, scanning the divisibility block from a_0 upward.
inline std::optional<power_condition_failure> power_conditions(const polynomial& f,
                                                               const integer& p, unsigned k) {
    const int n = f.degree();
    if (divides(p, f.leading())) return power_condition_failure{fail_reason::leading_divisible, n};
    const integer pk = int_pow(p, k);
    for (int i = 0; i < n; ++i)
        if (!divides(pk, f.coefficient(static_cast<std::size_t>(i))))
            return power_condition_failure{fail_reason::coeff_underdivisible, i};
    if (divides(pk * p, f.constant()))
        return power_condition_failure{fail_reason::constant_overdivisible, 0};
    return std::nullopt;
}

inline std::string power_text(const power_condition_failure& fail, const integer& p, unsigned k) {
    const std::string ps = p.str();
    switch (fail.why) {
        case fail_reason::leading_divisible:
            return ps + " divides the leading coefficient";
        case fail_reason::coeff_underdivisible:
            return (k == 1 ? ps : ps + "^" + std::to_string(k)) + " does not divide a_" +
                   std::to_string(fail.index);
        default:
            return ps + "^" + std::to_string(k + 1) + " divides the constant term";
    }
}

}  // namespace detail

/// Classical Eisenstein test: p not dividing a_n, p dividing every other
/// coefficient, p^2 not dividing a_0.
inline criterion_verdict eisenstein_check(const polynomial& f, const integer& p) {
    detail::require_checkable(f);
    detail::require_prime(p);
    if (auto fail = detail::power_conditions(f, p, 1))
        return detail::failure(criterion_id::eisenstein, p, fail->why,
                               detail::power_text(*fail, p, 1));
    return detail::success(criterion_id::eisenstein, p);
}

/// Eisenstein with the roles of the constant term and the leading coefficient
/// exchanged: run on the reversed coefficient sequence.
inline criterion_verdict reversed_eisenstein_check(const polynomial& f, const integer& p) {
    detail::require_checkable(f);
    detail::require_prime(p);
    if (f.constant() == 0) throw zero_constant_term_error();
    const int n = f.degree();
    if (auto fail = detail::power_conditions(reversed(f), p, 1)) {
        // report in the original orientation
        std::string text;
        switch (fail->why) {
            case fail_reason::leading_divisible:
                text = p.str() + " divides the constant term";
                break;
            case fail_reason::coeff_underdivisible:
                text = p.str() + " does not divide a_" + std::to_string(n - fail->index);
                break;
            default:
                text = p.str() + "^2 divides the leading coefficient";
                break;
        }
        return detail::failure(criterion_id::reversed_eisenstein, p, fail->why, std::move(text));
    }
    return detail::success(criterion_id::reversed_eisenstein, p);
}

/// Power-k Eisenstein generalization: requires gcd(k, n) = 1, p not dividing
/// a_n, p^k dividing all other coefficients and p^(k+1) not dividing a_0.
inline criterion_verdict generalized_check(const polynomial& f, const integer& p, unsigned k) {
    detail::require_checkable(f);
    detail::require_prime(p);
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    const unsigned n = static_cast<unsigned>(f.degree());
    const unsigned g = std::gcd(k, n);
    criterion_verdict v;
    if (g != 1) {
        v = detail::failure(criterion_id::generalized, p, fail_reason::exponent_not_coprime,
                            "gcd(k, n) = gcd(" + std::to_string(k) + ", " + std::to_string(n) +
                                ") = " + std::to_string(g));
    } else if (auto fail = detail::power_conditions(f, p, k)) {
        v = detail::failure(criterion_id::generalized, p, fail->why,
                            detail::power_text(*fail, p, k));
    } else {
        v = detail::success(criterion_id::generalized, p);
    }
    v.k = k;
    return v;
}

/// Dumas test: irreducible when the Newton diagram with respect to p is a
/// single simple segment.
inline criterion_verdict dumas_check(const polynomial& f, const integer& p) {
    detail::require_checkable(f);
    detail::require_prime(p);
    const newton_diagram d = build_diagram(f, p);
    if (d.segments.size() > 1)
        return detail::failure(criterion_id::dumas, p, fail_reason::multiple_segments,
                               "Newton diagram at " + p.str() + " has " +
                                   std::to_string(d.segments.size()) + " segments");
    const diagram_segment& s = d.segments.front();
    if (!s.simple) {
        auto pts = lattice_points_on(s);
        std::string text = "single segment (" + std::to_string(s.start.index) + "," +
                           std::to_string(s.start.val) + ")->(" + std::to_string(s.end.index) +
                           "," + std::to_string(s.end.val) + ") is not simple; interior points:";
        for (std::size_t i = 1; i + 1 < pts.size(); ++i)
            text += " (" + std::to_string(pts[i].index) + "," + std::to_string(pts[i].val) + ")";
        return detail::failure(criterion_id::dumas, p, fail_reason::segment_not_simple,
                               std::move(text));
    }
    return detail::success(criterion_id::dumas, p);
}

/// k=2 structure test: under p not dividing a_n, p dividing a_i for i <= n-1,
/// p^2 dividing a_j for j <= floor(n/2) and p^3 not dividing a_0, an odd-degree
/// polynomial is irreducible and an even-degree one is either irreducible or
/// the product of exactly two equal-degree factors Eisenstein at p.
inline criterion_verdict k2_structure_check(const polynomial& f, const integer& p) {
    detail::require_checkable(f);
    detail::require_prime(p);
    const int n = f.degree();
    const auto fail = [&](fail_reason why, std::string text) {
        auto v = detail::failure(criterion_id::k2_structure, p, why, std::move(text));
        v.k = 2;
        return v;
    };
    if (divides(p, f.leading()))
        return fail(fail_reason::leading_divisible, p.str() + " divides the leading coefficient");
    for (int i = 0; i < n; ++i)
        if (!divides(p, f.coefficient(static_cast<std::size_t>(i))))
            return fail(fail_reason::coeff_underdivisible,
                        p.str() + " does not divide a_" + std::to_string(i));
    const integer p2 = p * p;
    for (int j = 0; j <= n / 2; ++j)
        if (!divides(p2, f.coefficient(static_cast<std::size_t>(j))))
            return fail(fail_reason::coeff_underdivisible,
                        p.str() + "^2 does not divide a_" + std::to_string(j) + " (index <= n/2)");
    if (divides(p2 * p, f.constant()))
        return fail(fail_reason::constant_overdivisible,
                    p.str() + "^3 divides the constant term");

    criterion_verdict v;
    v.criterion = criterion_id::k2_structure;
    v.witness_prime = p;
    v.k = 2;
    if (n % 2 == 1) {
        v.kind = verdict_kind::irreducible;
    } else {
        v.kind = verdict_kind::irreducible_or_two_eisenstein_halves;
        v.half_degree = n / 2;
    }
    return v;
}

struct candidate_prime_set {
    std::vector<integer> primes;
    bool complete = true;  // false when an unfactored composite cofactor remains
};

namespace detail {

/// Trial-divide |v|, collecting prime divisors up to the bound. A leftover
/// cofactor that passes the primality test still counts as found; anything
/// else flips `complete` off.
inline void collect_prime_divisors(integer v, const integer& bound, std::set<integer>& out,
                                   bool& complete) {
    v = abs(v);
    if (v <= 1) return;
    const auto strip = [&](const integer& d) {
        if (divides(d, v)) {
            out.insert(d);
            do v /= d; while (divides(d, v));
        }
    };
    if (bound >= 2) strip(2);
    for (integer d = 3; d <= bound && d * d <= v; d += 2) strip(d);
    if (v == 1) return;
    if (is_probable_prime(v)) {
        out.insert(v);
        return;
    }
    if (v <= bound * bound) {
        // composite with no divisor <= bound is impossible below bound^2
        throw std::logic_error("trial division missed a factor");
    }
    complete = false;
}

}  // namespace detail

/// Primes worth trying against f: every single-segment diagram with nonzero
/// slope needs p | a_0 or p | a_n, so candidates come from trial division of
/// the constant and leading coefficients.
inline candidate_prime_set candidate_primes(const polynomial& f, const integer& trial_bound) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.constant() == 0) throw zero_constant_term_error();
    candidate_prime_set result;
    std::set<integer> primes;
    detail::collect_prime_divisors(f.constant(), trial_bound, primes, result.complete);
    detail::collect_prime_divisors(f.leading(), trial_bound, primes, result.complete);
    result.primes.assign(primes.begin(), primes.end());
    return result;
}

struct auto_config {
    integer trial_bound{1000000};
    unsigned shift_bound = 5;
    unsigned max_k = 8;
};

struct check_attempt {
    integer shift;
    integer prime;
    criterion_id criterion;
    std::optional<unsigned> k;
    criterion_verdict verdict;
};

struct check_report {
    criterion_verdict best;
    std::vector<check_attempt> attempts;
    bool prime_search_complete = true;
};

/// Try every criterion over every candidate prime of every shifted polynomial
/// f(x + c), |c| <= shift_bound, in a fixed deterministic order: shifts by
/// |c| then sign, primes ascending, then eisenstein, reversed eisenstein,
/// generalized for coprime k, the k=2 structure test, and dumas. The first
/// irreducible verdict wins (irreducibility of f(x+c) transfers to f); a
/// structure dichotomy beats inconclusive.
inline check_report auto_check(const polynomial& f, const auto_config& config = {}) {
    detail::require_checkable(f);
    check_report report;
    const unsigned n = static_cast<unsigned>(f.degree());

    std::vector<integer> shifts{0};
    for (unsigned m = 1; m <= config.shift_bound; ++m) {
        shifts.emplace_back(-static_cast<int>(m));
        shifts.emplace_back(m);
    }

    for (const integer& c : shifts) {
        const polynomial g = c == 0 ? f : taylor_shift(f, c);
        if (g.constant() == 0) continue;  // f(-c) = 0, nothing can fire on this shift
        const candidate_prime_set candidates = candidate_primes(g, config.trial_bound);
        report.prime_search_complete =
            report.prime_search_complete && candidates.complete;
        for (const integer& p : candidates.primes) {
            const auto run = [&](criterion_verdict v) {
                v.shift = c;
                report.attempts.push_back({c, p, *v.criterion, v.k, v});
                if (v.kind == verdict_kind::irreducible) {
                    report.best = std::move(v);
                    return true;
                }
                if (v.kind == verdict_kind::irreducible_or_two_eisenstein_halves &&
                    report.best.kind == verdict_kind::inconclusive)
                    report.best = std::move(v);
                return false;
            };
            if (run(eisenstein_check(g, p))) return report;
            if (run(reversed_eisenstein_check(g, p))) return report;
            bool done = false;
            for (unsigned k = 1; k <= config.max_k && !done; ++k)
                if (std::gcd(k, n) == 1) done = run(generalized_check(g, p, k));
            if (done) return report;
            if (run(k2_structure_check(g, p))) return report;
            if (run(dumas_check(g, p))) return report;
        }
    }

    if (report.best.kind == verdict_kind::inconclusive && !report.best.criterion) {
        report.best.reason = "no criterion fired within shift bound " +
                             std::to_string(config.shift_bound) + " and k bound " +
                             std::to_string(config.max_k);
        if (!report.prime_search_complete)
            report.best.reason += " (candidate prime search incomplete at trial bound " +
                                  config.trial_bound.str() + ")";
    }
    return report;
}

}  // namespace eisen
