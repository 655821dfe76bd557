#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <eisen/errors.hpp>
#include <eisen/polynomial.hpp>

namespace eisen {

namespace detail {

// expr := ws [sign] term (ws ('+'|'-') ws term)* ws
// term := INT | [INT ['*']] 'x' ['^' UINT]
// INT is an unbounded decimal integer; whitespace between tokens is ignored.
class expression_parser {
public:
    explicit expression_parser(std::string_view src) : src_(src) {}

    polynomial parse() {
        skip_ws();
        if (at_end()) throw parse_error(pos_, "a term");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = -1;
            skip_ws();
        }
        term(sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw parse_error(pos_, "'+', '-', or end of input");
            take();
            skip_ws();
            term(op == '-' ? -1 : 1);
        }
        return polynomial(std::move(coeffs_));
    }

private:
    void term(int sign) {
        if (at_end()) throw parse_error(pos_, "a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const integer value = parse_int();
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                if (at_end() || peek() != 'x') throw parse_error(pos_, "'x'");
                add(sign * value, parse_x_part());
            } else if (!at_end() && peek() == 'x') {
                add(sign * value, parse_x_part());
            } else {
                add(sign * value, 0);
            }
        } else if (peek() == 'x') {
            add(integer(sign), parse_x_part());
        } else {
            throw parse_error(pos_, "a decimal integer or 'x'");
        }
    }

    std::size_t parse_x_part() {
        take();  // 'x'
        if (at_end() || peek() != '^') return 1;
        take();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(pos_, "an exponent");
        const std::size_t digits_at = pos_;
        const integer e = parse_int();
        if (e > max_exponent)
            throw parse_error(digits_at,
                              "an exponent no larger than " + std::to_string(max_exponent));
        return e.convert_to<std::size_t>();
    }

    integer parse_int() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) take();
        std::size_t end = pos_;
        while (start + 1 < end && src_[start] == '0') ++start;  // cpp_int reads 0... as octal
        return integer(std::string(src_.substr(start, end - start)));
    }

    void add(const integer& coeff, std::size_t power) {
        if (coeffs_.size() <= power) coeffs_.resize(power + 1);
        coeffs_[power] += coeff;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    char take() { return src_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) take();
    }

    static constexpr std::size_t max_exponent = 1000000;

    std::string_view src_;
    std::size_t pos_ = 0;
    std::vector<integer> coeffs_;
};

}  // namespace detail

/// Parse a polynomial expression like "x^4+5x^3+25x^2+50x+150". Like terms
/// combine; the result may be the zero polynomial ("x - x"), which downstream
/// operations reject. Throws parse_error with the byte offset on bad input.
inline polynomial parse_polynomial(std::string_view text) {
    return detail::expression_parser(text).parse();
}

/// Parse "a0,a1,...,an", ascending by power.
inline polynomial parse_coefficient_list(std::string_view text) {
    std::vector<integer> coeffs;
    std::size_t pos = 0;
    for (;;) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',') ++pos;
        std::string entry(text.substr(start, pos - start));
        std::size_t lead = entry.find_first_not_of(" \t");
        std::size_t tail = entry.find_last_not_of(" \t");
        if (lead == std::string::npos) throw parse_error(start, "a decimal integer");
        entry = entry.substr(lead, tail - lead + 1);
        std::size_t i = entry[0] == '+' || entry[0] == '-' ? 1 : 0;
        if (i == entry.size()) throw parse_error(start + lead, "a decimal integer");
        for (std::size_t j = i; j < entry.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(entry[j])))
                throw parse_error(start + lead + j, "a decimal digit");
        while (i + 1 < entry.size() && entry[i] == '0') entry.erase(i, 1);
        if (entry[0] == '+') entry.erase(0, 1);  // cpp_int rejects a leading '+'
        coeffs.emplace_back(entry);
        if (pos == text.size()) break;
        ++pos;  // ','
    }
    return polynomial(std::move(coeffs));
}

}  // namespace eisen
