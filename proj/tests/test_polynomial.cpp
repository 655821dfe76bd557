#include <catch2/catch_amalgamated.hpp>

#include <eisen/parse.hpp>
#include <eisen/polynomial.hpp>

#include "helpers.hpp"

using namespace eisen;
using testutil::rand_long;
using testutil::rand_poly;
using testutil::rng_t;

TEST_CASE("p-adic valuation of integers") {
    CHECK(p_adic_valuation(12, 2).value() == 2);
    CHECK(p_adic_valuation(0, 7).is_infinite());
    CHECK(p_adic_valuation(150, 5).value() == 2);
    CHECK(p_adic_valuation(-12, 2).value() == 2);  // sign is ignored
    CHECK(p_adic_valuation(1, 2).value() == 0);
    CHECK_THROWS_AS(p_adic_valuation(10, 1), invalid_prime_error);
    CHECK_THROWS_AS(p_adic_valuation(10, -3), invalid_prime_error);
}

TEST_CASE("valuation is additive and respects the ultrametric bound") {
    rng_t rng(20240811);
    const integer p = 3;
    for (int i = 0; i < 300; ++i) {
        const integer a = rand_long(rng, -5000, 5000);
        const integer b = rand_long(rng, -5000, 5000);
        if (a == 0 || b == 0) continue;
        CHECK(p_adic_valuation(a * b, p).value() ==
              p_adic_valuation(a, p).value() + p_adic_valuation(b, p).value());
        if (a + b == 0) continue;
        const valuation va = p_adic_valuation(a, p), vb = p_adic_valuation(b, p);
        const valuation vs = p_adic_valuation(a + b, p);
        CHECK(vs >= std::min(va, vb));
        if (va != vb) CHECK(vs == std::min(va, vb));
    }
}

TEST_CASE("multiplication is an exact convolution") {
    const polynomial x_minus_2{-2, 1}, x_plus_2{2, 1};
    CHECK(x_minus_2 * x_plus_2 == polynomial{-4, 0, 1});

    const polynomial a{10, 0, 1};      // x^2+10
    const polynomial b{15, 5, 1};      // x^2+5x+15
    CHECK(a * b == parse_polynomial("x^4+5x^3+25x^2+50x+150"));

    const polynomial one{1};
    const polynomial f = parse_polynomial("7x^3-2x+5");
    CHECK(one * f == f);
    CHECK((a * b).degree() == a.degree() + b.degree());

    CHECK_THROWS_AS(f * polynomial{}, zero_polynomial_error);
    CHECK_THROWS_AS(polynomial{} * f, zero_polynomial_error);
}

TEST_CASE("multiplication is commutative and associative") {
    rng_t rng(7);
    for (int i = 0; i < 100; ++i) {
        const polynomial f = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 4)), 30, false);
        const polynomial g = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 4)), 30, false);
        const polynomial h = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 4)), 30, false);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("taylor shift substitutes x + c") {
    CHECK(taylor_shift(polynomial{0, 0, 1}, 1) == polynomial{1, 2, 1});
    const polynomial f = parse_polynomial("3x^5-7x^2+x-11");
    CHECK(taylor_shift(f, 0) == f);

    // g(t) = f(t+c), checked pointwise
    const polynomial g = taylor_shift(parse_polynomial("x^2+1"), 1);
    CHECK(g == polynomial{2, 2, 1});
    for (integer t = -3; t <= 3; ++t) {
        integer shifted = t + 1;
        CHECK(evaluate(g, t) == evaluate(parse_polynomial("x^2+1"), shifted));
    }

    CHECK_THROWS_AS(taylor_shift(polynomial{}, 2), zero_polynomial_error);
}

TEST_CASE("taylor shift preserves degree and leading coefficient and inverts") {
    rng_t rng(99);
    for (int i = 0; i < 100; ++i) {
        const polynomial f = rand_poly(rng, static_cast<int>(rand_long(rng, 1, 6)), 50, false);
        const integer c = rand_long(rng, -6, 6);
        const polynomial g = taylor_shift(f, c);
        CHECK(g.degree() == f.degree());
        CHECK(g.leading() == f.leading());
        CHECK(taylor_shift(g, -c) == f);
    }
}

TEST_CASE("evaluation is exact Horner") {
    CHECK(evaluate(parse_polynomial("x^4+12"), 0) == 12);
    CHECK(evaluate(parse_polynomial("x^2-4"), 2) == 0);
    CHECK(evaluate(parse_polynomial("x^4+5x^3+25x^2+50x+150"), 1) == 231);
    CHECK(evaluate(polynomial{}, 5) == 0);
}

TEST_CASE("evaluation is multiplicative") {
    rng_t rng(13);
    for (int i = 0; i < 100; ++i) {
        const polynomial f = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 5)), 40, false);
        const polynomial g = rand_poly(rng, static_cast<int>(rand_long(rng, 0, 5)), 40, false);
        const integer t = rand_long(rng, -10, 10);
        CHECK(evaluate(f * g, t) == evaluate(f, t) * evaluate(g, t));
    }
}

TEST_CASE("zero polynomial bookkeeping") {
    const polynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coefficients().empty());
    CHECK_THROWS_AS(z.leading(), zero_polynomial_error);
    CHECK(polynomial{0, 0, 0}.is_zero());

    const polynomial f{5, 1};
    CHECK((f - f).is_zero());
}

TEST_CASE("reversal, content and exact division") {
    const polynomial f = parse_polynomial("12x^4+1");
    CHECK(reversed(f) == parse_polynomial("x^4+12"));
    CHECK(reversed(reversed(f)) == f);
    CHECK(reversed(polynomial{0, 0, 1}) == polynomial{1});  // x^2 reverses to 1

    CHECK(content(parse_polynomial("6x^2-9x+3")) == 3);
    CHECK(content(polynomial{}) == 0);
    CHECK(primitive_part(parse_polynomial("6x^2-9x+3")) == parse_polynomial("2x^2-3x+1"));
    CHECK(primitive_part(parse_polynomial("-4x-8")) == parse_polynomial("-x-2"));

    const polynomial prod = parse_polynomial("x^4+5x^3+25x^2+50x+150");
    auto q = try_divide_exact(prod, polynomial{10, 0, 1});
    REQUIRE(q);
    CHECK(*q == polynomial{15, 5, 1});
    CHECK_FALSE(try_divide_exact(prod, polynomial{1, 1}));
    CHECK_FALSE(try_divide_exact(polynomial{1, 1}, prod));
    CHECK_FALSE(try_divide_exact(polynomial{3, 2}, polynomial{0, 1}));
    CHECK_THROWS_AS(try_divide_exact(prod, polynomial{}), zero_polynomial_error);
}

TEST_CASE("canonical ordering sorts by degree then coefficients") {
    CHECK(canonical_less(polynomial{5, 1}, polynomial{0, 0, 1}));
    CHECK(canonical_less(polynomial{-2, 1}, polynomial{2, 1}));
    CHECK(canonical_less(polynomial{10, 0, 1}, polynomial{15, 5, 1}));
    CHECK_FALSE(canonical_less(polynomial{2, 1}, polynomial{2, 1}));
}

TEST_CASE("probable prime test") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(3));
    CHECK(is_probable_prime(97));
    CHECK(is_probable_prime(1000003));
    CHECK(is_probable_prime(integer("32416190071")));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(0));
    CHECK_FALSE(is_probable_prime(-7));
    CHECK_FALSE(is_probable_prime(91));          // 7 * 13
    CHECK_FALSE(is_probable_prime(1000002));
    CHECK_FALSE(is_probable_prime(integer("3215031751")));  // strong pseudoprime to 2,3,5,7
}
