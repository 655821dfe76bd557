#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace eisen {

/// The zero polynomial has no degree; every criterion and diagram operation
/// rejects it with this error.
struct zero_polynomial_error : std::domain_error {
    zero_polynomial_error() : std::domain_error("operation is undefined for the zero polynomial") {}
};

struct degree_too_small_error : std::domain_error {
    explicit degree_too_small_error(const std::string& what) : std::domain_error(what) {}
};

/// Raised where a nonzero constant term is required. Callers that really mean
/// f = x^m * g should strip the power of x first (the CLI has --strip-x).
struct zero_constant_term_error : std::domain_error {
    zero_constant_term_error()
        : std::domain_error("constant term is zero; strip the power of x first") {}
};

struct invalid_prime_error : std::invalid_argument {
    explicit invalid_prime_error(const std::string& what) : std::invalid_argument(what) {}
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, std::string expected)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": expected " +
                             expected),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace eisen
