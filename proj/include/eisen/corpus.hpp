#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include <eisen/parse.hpp>
#include <eisen/report.hpp>

namespace eisen {

/// One regression line: {"poly": "...", "expect": {"verdict": "...",
/// "criterion"?: "...", "prime"?: "..."}, "note": "..."}.
struct corpus_entry {
    std::string poly;
    verdict_kind expect_kind;
    std::optional<criterion_id> expect_criterion;
    std::optional<integer> expect_prime;
    std::string note;
};

inline corpus_entry parse_corpus_line(const std::string& line) {
    const json j = json::parse(line);
    corpus_entry e;
    e.poly = j.at("poly").get<std::string>();
    const json& expect = j.at("expect");
    auto kind = verdict_from_string(expect.at("verdict").get<std::string>());
    if (!kind) throw std::runtime_error("unknown verdict: " + expect.at("verdict").dump());
    e.expect_kind = *kind;
    if (expect.contains("criterion")) {
        auto c = criterion_from_string(expect.at("criterion").get<std::string>());
        if (!c) throw std::runtime_error("unknown criterion: " + expect.at("criterion").dump());
        e.expect_criterion = *c;
    }
    if (expect.contains("prime")) e.expect_prime = integer(expect.at("prime").get<std::string>());
    if (j.contains("note")) e.note = j.at("note").get<std::string>();
    return e;
}

struct corpus_summary {
    int checked = 0;
    int mismatches = 0;
    int malformed = 0;
};

/// Run auto_check over every line and compare against the expectation.
/// Results are emitted in input order; any mismatch makes the run fail.
inline corpus_summary run_corpus(std::istream& in, std::ostream& out,
                                 const auto_config& config = {}) {
    corpus_summary summary;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        corpus_entry entry;
        try {
            entry = parse_corpus_line(line);
        } catch (const std::exception& e) {
            ++summary.malformed;
            out << "line " << lineno << ": MALFORMED (" << e.what() << ")\n";
            continue;
        }
        ++summary.checked;
        try {
            const check_report report = auto_check(parse_polynomial(entry.poly), config);
            const criterion_verdict& got = report.best;
            std::string mismatch;
            if (got.kind != entry.expect_kind)
                mismatch = "verdict " + std::string(to_string(got.kind)) + ", expected " +
                           std::string(to_string(entry.expect_kind));
            else if (entry.expect_criterion && got.criterion != *entry.expect_criterion)
                mismatch = "criterion " +
                           std::string(got.criterion ? to_string(*got.criterion) : "none") +
                           ", expected " + std::string(to_string(*entry.expect_criterion));
            else if (entry.expect_prime &&
                     (!got.witness_prime || *got.witness_prime != *entry.expect_prime))
                mismatch = "prime " + (got.witness_prime ? got.witness_prime->str() : "none") +
                           ", expected " + entry.expect_prime->str();
            if (mismatch.empty()) {
                out << "line " << lineno << ": ok  " << entry.poly << " -> "
                    << to_string(got.kind) << "\n";
            } else {
                ++summary.mismatches;
                out << "line " << lineno << ": MISMATCH  " << entry.poly << ": " << mismatch
                    << "\n";
            }
        } catch (const std::exception& e) {
            ++summary.mismatches;
            out << "line " << lineno << ": MISMATCH  " << entry.poly << ": " << e.what() << "\n";
        }
    }
    out << summary.checked << " checked, " << summary.mismatches << " mismatched, "
        << summary.malformed << " malformed\n";
    return summary;
}

}  // namespace eisen
