#include <catch2/catch_amalgamated.hpp>

#include <eisen/criteria.hpp>
#include <eisen/parse.hpp>
#include <eisen/report.hpp>

#include "helpers.hpp"

using namespace eisen;
using testutil::rand_long;
using testutil::rand_poly;
using testutil::rng_t;

TEST_CASE("expression parsing") {
    CHECK(parse_polynomial("x^4 + 12").coefficients() ==
          std::vector<integer>{12, 0, 0, 0, 1});
    CHECK(parse_polynomial("x^4+5x^3+25x^2+50x+150").coefficients() ==
          std::vector<integer>{150, 50, 25, 5, 1});
    CHECK(parse_polynomial("x - x").is_zero());
    CHECK(parse_polynomial("-x^2+3x-1") == polynomial{-1, 3, -1});
    CHECK(parse_polynomial("+5") == polynomial{5});
    CHECK(parse_polynomial("2*x^3") == polynomial{0, 0, 0, 2});
    CHECK(parse_polynomial("3 x^2 - 2 x") == polynomial{0, -2, 3});
    CHECK(parse_polynomial("x") == polynomial{0, 1});
    CHECK(parse_polynomial("x^2 + x + x") == polynomial{0, 2, 1});  // like terms combine
    CHECK(parse_polynomial("340282366920938463463374607431768211457") ==
          polynomial{integer("340282366920938463463374607431768211457")});
}

TEST_CASE("the zero polynomial parses but downstream rejects it") {
    const polynomial z = parse_polynomial("x - x");
    CHECK(z.is_zero());
    CHECK_THROWS_AS(eisenstein_check(z, 2), zero_polynomial_error);
    CHECK_THROWS_AS(auto_check(z), zero_polynomial_error);
}

TEST_CASE("parse errors carry the byte offset") {
    const auto offset_of = [](std::string_view text) {
        try {
            parse_polynomial(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("   ") == 3);
    CHECK(offset_of("x^") == 2);
    CHECK(offset_of("x^-2") == 2);
    CHECK(offset_of("4*5") == 2);
    CHECK(offset_of("x++1") == 2);
    CHECK(offset_of("x^4 & 2") == 4);
    CHECK(offset_of("y") == 0);
    CHECK(offset_of("x^99999999") == 2);  // exponent above the supported cap

    try {
        parse_polynomial("x^4 + *");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 6);
        CHECK_FALSE(e.expected().empty());
    }
}

TEST_CASE("coefficient list parsing") {
    CHECK(parse_coefficient_list("12,0,0,0,1") == parse_polynomial("x^4+12"));
    CHECK(parse_coefficient_list("-4, 0, 1") == parse_polynomial("x^2-4"));
    CHECK(parse_coefficient_list("0,0,0") .is_zero());
    CHECK_THROWS_AS(parse_coefficient_list("1,,2"), parse_error);
    CHECK_THROWS_AS(parse_coefficient_list("1,two"), parse_error);
    CHECK_THROWS_AS(parse_coefficient_list(""), parse_error);
}

TEST_CASE("printing and reparsing is a fixed point") {
    rng_t rng(60601);
    for (int i = 0; i < 300; ++i) {
        polynomial f = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 8)), 100, false);
        if (rand_long(rng, 0, 3) == 0) {
            // sprinkle zero coefficients
            auto c = f.coefficients();
            for (auto& v : c)
                if (rand_long(rng, 0, 1)) v = 0;
            if (c.back() == 0) c.back() = 1;
            f = polynomial(std::move(c));
        }
        const std::string printed = to_string(f);
        CHECK(parse_polynomial(printed) == f);
        CHECK(to_string(parse_polynomial(printed)) == printed);
    }
    CHECK(to_string(polynomial{}) == "0");
    CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("verdict json carries the fields needed to recompute it") {
    const polynomial f = parse_polynomial("x^2+x+1");
    const check_report report = auto_check(f);
    const json j = to_json(report);

    REQUIRE(j.at("verdict") == "irreducible");
    const integer prime(j.at("prime").get<std::string>());
    const integer shift(j.at("shift").get<long long>());
    const auto criterion = criterion_from_string(j.at("criterion").get<std::string>());
    REQUIRE(criterion.has_value());

    const polynomial g = shift == 0 ? f : taylor_shift(f, shift);
    criterion_verdict again;
    switch (*criterion) {
        case criterion_id::eisenstein: again = eisenstein_check(g, prime); break;
        case criterion_id::reversed_eisenstein: again = reversed_eisenstein_check(g, prime); break;
        case criterion_id::generalized:
            again = generalized_check(g, prime, j.at("k").get<unsigned>());
            break;
        case criterion_id::dumas: again = dumas_check(g, prime); break;
        case criterion_id::k2_structure: again = k2_structure_check(g, prime); break;
    }
    CHECK(to_string(again.kind) == j.at("verdict").get<std::string>());

    // attempts are serialized in scan order
    REQUIRE(j.at("attempts").is_array());
    CHECK(j.at("attempts").size() == report.attempts.size());
}

TEST_CASE("string round trips for enums") {
    for (const auto c : {criterion_id::eisenstein, criterion_id::reversed_eisenstein,
                         criterion_id::generalized, criterion_id::dumas,
                         criterion_id::k2_structure})
        CHECK(criterion_from_string(to_string(c)) == c);
    for (const auto v : {verdict_kind::irreducible,
                         verdict_kind::irreducible_or_two_eisenstein_halves,
                         verdict_kind::inconclusive})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK_FALSE(criterion_from_string("bogus").has_value());
    CHECK_FALSE(verdict_from_string("bogus").has_value());
}
