// eisen: irreducibility criteria for integer polynomials, with a Newton
// diagram renderer and a Kronecker factorization oracle.

#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <eisen/corpus.hpp>
#include <eisen/criteria.hpp>
#include <eisen/oracle.hpp>
#include <eisen/parse.hpp>
#include <eisen/render.hpp>
#include <eisen/report.hpp>

namespace {

using namespace eisen;

struct input_options {
    std::string poly;
    std::string coeffs;
    bool strip_x = false;
};

void add_input_flags(CLI::App* cmd, input_options& in) {
    auto* poly = cmd->add_option("--poly", in.poly, "polynomial expression, e.g. \"x^4+12\"");
    auto* coeffs =
        cmd->add_option("--coeffs", in.coeffs, "coefficients a0,a1,...,an ascending by power");
    poly->excludes(coeffs);
    cmd->add_flag("--strip-x", in.strip_x, "divide out the largest power of x first");
}

/// Parse the input channel; strips x^m when asked and reports m.
polynomial load_input(const input_options& in, int& stripped_power) {
    if (in.poly.empty() && in.coeffs.empty())
        throw CLI::ValidationError("input", "one of --poly or --coeffs is required");
    polynomial f = in.poly.empty() ? parse_coefficient_list(in.coeffs) : parse_polynomial(in.poly);
    stripped_power = 0;
    if (in.strip_x && !f.is_zero() && f.constant() == 0) {
        const auto& c = f.coefficients();
        std::size_t m = 0;
        while (c[m] == 0) ++m;
        f = polynomial(std::vector<integer>(c.begin() + static_cast<long>(m), c.end()));
        stripped_power = static_cast<int>(m);
    }
    return f;
}

std::string input_echo(const input_options& in) { return in.poly.empty() ? in.coeffs : in.poly; }

struct check_options {
    input_options in;
    std::string prime;
    std::string criterion;
    unsigned k = 0;
    bool auto_mode = false;
    bool verify = false;
    bool json_out = false;
    auto_config config;
    oracle_limits limits;
};

int run_check(const check_options& opt) {
    int stripped = 0;
    const polynomial f = load_input(opt.in, stripped);

    check_report report;
    const auto started = std::chrono::steady_clock::now();
    if (!opt.criterion.empty()) {
        const auto c = criterion_from_string(opt.criterion);
        if (!c) throw CLI::ValidationError("--criterion", "unknown criterion " + opt.criterion);
        if (opt.prime.empty())
            throw CLI::ValidationError("--criterion", "an explicit criterion needs --prime");
        const integer p(opt.prime);
        if (!is_probable_prime(p))
            throw CLI::ValidationError("--prime", opt.prime + " is not a prime number");
        criterion_verdict v;
        switch (*c) {
            case criterion_id::eisenstein: v = eisenstein_check(f, p); break;
            case criterion_id::reversed_eisenstein: v = reversed_eisenstein_check(f, p); break;
            case criterion_id::generalized:
                if (opt.k == 0)
                    throw CLI::ValidationError("--criterion", "generalized needs --k");
                v = generalized_check(f, p, opt.k);
                break;
            case criterion_id::dumas: v = dumas_check(f, p); break;
            case criterion_id::k2_structure: v = k2_structure_check(f, p); break;
        }
        report.best = v;
        report.attempts.push_back({0, p, *c, v.k, v});
    } else {
        report = auto_check(f, opt.config);
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    std::optional<verification_outcome> oracle;
    if (opt.verify) oracle = verify_verdict(f, report.best, opt.limits);

    if (opt.json_out) {
        json j = to_json(report);
        j["input"] = input_echo(opt.in);
        if (stripped > 0) j["stripped_x_power"] = stripped;
        if (oracle) j["oracle"] = to_json(*oracle);
        j["elapsed_ms"] = elapsed_ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input: " << input_echo(opt.in) << "\n";
        if (stripped > 0)
            std::cout << "stripped factor x^" << stripped << "; verdict refers to the cofactor "
                      << to_string(f) << "\n";
        print_verdict_text(std::cout, report.best);
        if (report.attempts.size() > 1) {
            std::cout << "attempts:\n";
            for (const auto& a : report.attempts) {
                std::cout << "  shift " << std::setw(2) << a.shift << "  p=" << a.prime << "  "
                          << to_string(a.criterion);
                if (a.k) std::cout << " k=" << *a.k;
                std::cout << "  " << to_string(a.verdict.kind);
                if (!a.verdict.reason.empty()) std::cout << "  (" << a.verdict.reason << ")";
                std::cout << "\n";
            }
        }
        if (oracle)
            std::cout << "oracle: " << to_string(oracle->status) << " (" << oracle->details
                      << ")\n";
        std::cout << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms << " ms\n";
    }
    return oracle ? exit_code_for(*oracle) : exit_ok;
}

struct diagram_options {
    input_options in;
    std::string prime;
    std::string svg_path;
};

int run_diagram(const diagram_options& opt) {
    int stripped = 0;
    const polynomial f = load_input(opt.in, stripped);
    const integer p(opt.prime);
    if (!is_probable_prime(p))
        throw CLI::ValidationError("--prime", opt.prime + " is not a prime number");
    const newton_diagram d = build_diagram(f, p);
    if (stripped > 0)
        std::cout << "stripped factor x^" << stripped << "; diagram is for " << to_string(f)
                  << "\n";
    render_diagram_text(d, std::cout);
    if (!opt.svg_path.empty()) {
        std::ofstream out(opt.svg_path);
        if (!out) throw CLI::ValidationError("--svg", "cannot write " + opt.svg_path);
        out << render_diagram_svg(d);
        std::cout << "svg written to " << opt.svg_path << "\n";
    }
    return exit_ok;
}

struct factor_options {
    input_options in;
    bool json_out = false;
    oracle_limits limits;
};

int run_factor(const factor_options& opt) {
    int stripped = 0;
    input_options in = opt.in;
    in.strip_x = false;  // factor_polynomial records powers of x as factors itself
    const polynomial f = load_input(in, stripped);
    const oracle_result r = factor_polynomial(f, opt.limits);
    if (opt.json_out) {
        json j;
        j["input"] = input_echo(opt.in);
        if (r.applicable())
            j["factorization"] = to_json(*r.factorization);
        else
            j["inapplicable"] = r.inapplicable_reason;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input: " << input_echo(opt.in) << "\n";
        if (!r.applicable()) {
            std::cout << "oracle inapplicable: " << r.inapplicable_reason << "\n";
        } else {
            const factorization_result& fact = *r.factorization;
            std::cout << "factorization:";
            if (fact.sign < 0) std::cout << " -1 *";
            if (fact.content != 1) std::cout << " " << fact.content << " *";
            for (const auto& e : fact.factors) {
                std::cout << " (" << e.factor << ")";
                if (e.multiplicity > 1) std::cout << "^" << e.multiplicity;
            }
            std::cout << "\n"
                      << (fact.is_irreducible() ? "irreducible over Z" : "reducible over Z")
                      << "\n";
        }
    }
    return exit_ok;
}

struct corpus_options {
    std::string file;
    auto_config config;
};

int run_corpus_cmd(const corpus_options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + opt.file);
    const corpus_summary s = run_corpus(in, std::cout, opt.config);
    if (s.malformed > 0) return exit_parse;
    return s.mismatches > 0 ? exit_usage : exit_ok;
}

void add_auto_flags(CLI::App* cmd, auto_config& config) {
    cmd->add_option_function<long long>(
        "--trial-bound", [&config](long long v) { config.trial_bound = v; },
        "trial division bound for candidate primes (default 1000000)");
    cmd->add_option("--shift-bound", config.shift_bound,
                    "try substitutions x -> x + c for |c| up to this bound (default 5)");
    cmd->add_option("--max-k", config.max_k, "largest k for the generalized test (default 8)");
}

void add_oracle_flags(CLI::App* cmd, oracle_limits& limits) {
    cmd->add_option("--max-degree", limits.max_degree, "oracle degree limit (default 8)");
    cmd->add_option_function<long long>(
        "--max-coeff", [&limits](long long v) { limits.max_abs_coeff = v; },
        "oracle coefficient magnitude limit (default 10^12)");
    cmd->add_option("--budget", limits.tuple_budget,
                    "divisor tuples per search stage (default 10^6)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducibility criteria for integer polynomials"};
    app.require_subcommand(1);

    check_options check;
    auto* check_cmd = app.add_subcommand(
        "check", "run one criterion or scan primes, substitutions and exponents");
    add_input_flags(check_cmd, check.in);
    check_cmd->add_option("--prime", check.prime, "prime to test against");
    check_cmd->add_option("--criterion", check.criterion,
                          "eisenstein | reversed_eisenstein | generalized | dumas | k2_structure");
    check_cmd->add_option("--k", check.k, "exponent for the generalized criterion");
    check_cmd->add_flag("--auto", check.auto_mode,
                        "scan candidate primes and substitutions (default without --criterion)");
    check_cmd->add_flag("--verify", check.verify, "cross-check the verdict against the oracle");
    check_cmd->add_flag("--json", check.json_out, "emit a single JSON document");
    add_auto_flags(check_cmd, check.config);
    add_oracle_flags(check_cmd, check.limits);

    diagram_options diagram;
    auto* diagram_cmd = app.add_subcommand("diagram", "render the Newton diagram of f at p");
    add_input_flags(diagram_cmd, diagram.in);
    diagram_cmd->add_option("--prime", diagram.prime, "prime")->required();
    diagram_cmd->add_option("--svg", diagram.svg_path, "also write an SVG rendering here");

    factor_options factor;
    auto* factor_cmd =
        app.add_subcommand("factor", "factor exactly with the Kronecker oracle (desk scale)");
    add_input_flags(factor_cmd, factor.in);
    factor_cmd->add_flag("--json", factor.json_out, "emit a single JSON document");
    add_oracle_flags(factor_cmd, factor.limits);

    corpus_options corpus;
    auto* corpus_cmd =
        app.add_subcommand("corpus", "run a JSONL expectation file through the auto scan");
    corpus_cmd->add_option("--file", corpus.file, "one {poly, expect, note} object per line")
        ->required();
    add_auto_flags(corpus_cmd, corpus.config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return eisen::exit_usage;
    }

    try {
        if (check_cmd->parsed()) return run_check(check);
        if (diagram_cmd->parsed()) return run_diagram(diagram);
        if (factor_cmd->parsed()) return run_factor(factor);
        return run_corpus_cmd(corpus);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return eisen::exit_usage;
    } catch (const eisen::invalid_prime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return eisen::exit_usage;
    } catch (const eisen::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return eisen::exit_parse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return eisen::exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return eisen::exit_usage;
    }
}
