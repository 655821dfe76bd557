#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include <eisen/criteria.hpp>
#include <eisen/oracle.hpp>

namespace eisen {

using json = nlohmann::json;

// process exit codes shared by the CLI and its tests
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_contradiction = 3;

inline std::string_view to_string(verdict_kind k) {
    switch (k) {
        case verdict_kind::irreducible: return "irreducible";
        case verdict_kind::irreducible_or_two_eisenstein_halves:
            return "irreducible_or_two_eisenstein_halves";
        default: return "inconclusive";
    }
}

inline std::string_view to_string(criterion_id c) {
    switch (c) {
        case criterion_id::eisenstein: return "eisenstein";
        case criterion_id::reversed_eisenstein: return "reversed_eisenstein";
        case criterion_id::generalized: return "generalized";
        case criterion_id::dumas: return "dumas";
        default: return "k2_structure";
    }
}

inline std::optional<criterion_id> criterion_from_string(std::string_view s) {
    if (s == "eisenstein") return criterion_id::eisenstein;
    if (s == "reversed_eisenstein") return criterion_id::reversed_eisenstein;
    if (s == "generalized") return criterion_id::generalized;
    if (s == "dumas") return criterion_id::dumas;
    if (s == "k2_structure") return criterion_id::k2_structure;
    return std::nullopt;
}

inline std::optional<verdict_kind> verdict_from_string(std::string_view s) {
    if (s == "irreducible") return verdict_kind::irreducible;
    if (s == "irreducible_or_two_eisenstein_halves")
        return verdict_kind::irreducible_or_two_eisenstein_halves;
    if (s == "inconclusive") return verdict_kind::inconclusive;
    return std::nullopt;
}

inline std::string_view to_string(verification_status s) {
    switch (s) {
        case verification_status::consistent: return "consistent";
        case verification_status::contradiction: return "contradiction";
        default: return "oracle_inapplicable";
    }
}

/// Arbitrary-precision values are emitted as decimal strings; machine-sized
/// ones (k, shift, degrees, counts) as JSON numbers.
inline json to_json(const criterion_verdict& v) {
    json j;
    j["verdict"] = to_string(v.kind);
    if (v.criterion) j["criterion"] = to_string(*v.criterion);
    if (v.witness_prime) j["prime"] = v.witness_prime->str();
    if (v.k) j["k"] = *v.k;
    if (v.half_degree) j["half_degree"] = *v.half_degree;
    j["shift"] = v.shift.convert_to<long long>();
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

inline json to_json(const check_report& report) {
    json j = to_json(report.best);
    j["attempts"] = json::array();
    for (const auto& a : report.attempts) {
        json aj;
        aj["shift"] = a.shift.convert_to<long long>();
        aj["prime"] = a.prime.str();
        aj["criterion"] = to_string(a.criterion);
        if (a.k) aj["k"] = *a.k;
        aj["verdict"] = to_string(a.verdict.kind);
        if (!a.verdict.reason.empty()) aj["reason"] = a.verdict.reason;
        j["attempts"].push_back(std::move(aj));
    }
    j["prime_search_complete"] = report.prime_search_complete;
    return j;
}

inline json to_json(const verification_outcome& o) {
    json j;
    j["status"] = to_string(o.status);
    j["details"] = o.details;
    return j;
}

inline json to_json(const factorization_result& r) {
    json j;
    j["sign"] = r.sign;
    j["content"] = r.content.str();
    j["input_degree"] = r.input_degree;
    j["irreducible"] = r.is_irreducible();
    j["factors"] = json::array();
    for (const auto& e : r.factors)
        j["factors"].push_back({{"poly", to_string(e.factor)}, {"multiplicity", e.multiplicity}});
    return j;
}

inline json to_json(const newton_diagram& d) {
    json j;
    j["prime"] = d.prime.str();
    j["vertices"] = json::array();
    for (const auto& v : d.vertices) j["vertices"].push_back({v.index, v.val});
    j["segments"] = json::array();
    for (const auto& s : d.segments) {
        json sj;
        sj["from"] = {s.start.index, s.start.val};
        sj["to"] = {s.end.index, s.end.val};
        sj["slope"] = numerator(s.slope).str() + "/" + denominator(s.slope).str();
        sj["lattice_points"] = s.lattice_points;
        sj["simple"] = s.simple;
        j["segments"].push_back(std::move(sj));
    }
    return j;
}

inline void print_verdict_text(std::ostream& os, const criterion_verdict& v) {
    os << "verdict: " << to_string(v.kind) << "\n";
    if (v.criterion) os << "criterion: " << to_string(*v.criterion) << "\n";
    if (v.witness_prime) os << "prime: " << *v.witness_prime << "\n";
    if (v.k) os << "k: " << *v.k << "\n";
    if (v.half_degree) os << "half degree: " << *v.half_degree << "\n";
    if (v.shift != 0) os << "shift: x -> x + (" << v.shift << ")\n";
    if (!v.reason.empty()) os << "reason: " << v.reason << "\n";
}

inline int exit_code_for(const verification_outcome& o) {
    return o.status == verification_status::contradiction ? exit_contradiction : exit_ok;
}

}  // namespace eisen
