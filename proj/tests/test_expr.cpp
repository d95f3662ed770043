#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quadext/expr.hpp"

using namespace quadext;

TEST_CASE("parse basics") {
    auto F3 = GaloisField::of_size(3);
    auto F2 = GaloisField::of_size(2);

    RationalFunction f = parse_expr("2*(x^3+2*x+2)", F3);
    RationalFunction g = parse_expr("2*x^3+x+1", F3);
    CHECK(f == g);

    CHECK(parse_expr("1/x + 1/(x+1)", F2) == parse_expr("1/(x^2+x)", F2));
    CHECK(parse_expr("x^0", F3) == RationalFunction::one(F3));
    CHECK(parse_expr("-x", F3) == parse_expr("2*x", F3));
    CHECK(parse_expr("  x ^ 2 ", F3) == parse_expr("x^2", F3));
}

TEST_CASE("parse errors") {
    auto F3 = GaloisField::of_size(3);
    auto F2 = GaloisField::of_size(2);
    CHECK_THROWS_AS(parse_expr("2x", F3), ParseError);         // no implicit multiplication
    CHECK_THROWS_AS(parse_expr("x+", F3), ParseError);
    CHECK_THROWS_AS(parse_expr("(x", F3), ParseError);
    CHECK_THROWS_AS(parse_expr("x^-1", F3), ParseError);
    CHECK_THROWS_AS(parse_expr("1/(x-x)", F3), ParseError);    // zero function
    CHECK_THROWS_AS(parse_expr("w", F2), ParseError);          // no w over a prime field
    CHECK_THROWS_AS(parse_expr("w+x", F3), ParseError);
    CHECK_THROWS_AS(parse_expr("y+x", F3), ParseError);        // y only in equation texts
    try {
        parse_expr("x+%", F3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("w lowering") {
    auto F8 = GaloisField::of_size(8);
    CHECK(exprs_equal("w^3", "w+1", F8));  // default modulus x^3+x+1
    CHECK(parse_expr("w", F8) == RationalFunction(Polynomial::constant(F8->generator())));
    // explicit w override
    FieldElement w2 = F8->generator().pow(2);
    CHECK(parse_expr("w", F8, w2) == RationalFunction(Polynomial::constant(w2)));

    auto F4 = GaloisField::of_size(4);
    CHECK(parse_expr("2", F4).is_zero());  // integers land in the prime subfield
}

TEST_CASE("format canonical examples") {
    auto F2 = GaloisField::of_size(2);
    auto F3 = GaloisField::of_size(3);
    CHECK(format_canonical(parse_expr("1/x + 1/(x+1)", F2)) == "1/(x^2 + x)");
    CHECK(format_canonical(RationalFunction::zero(F3)) == "0");
    CHECK(format_canonical(parse_expr("(x+1)^2/x", F3)) == "(x^2 + 2*x + 1)/x");
    CHECK(format_canonical(parse_expr("x^3+2*x+1", F3)) == "x^3 + 2*x + 1");
    auto F9 = GaloisField::of_size(9);
    CHECK(format_canonical(parse_expr("w^5*x^2+2*x", F9)) == "w^5*x^2 + 2*x");
}

TEST_CASE("exprs_equal") {
    auto F3 = GaloisField::of_size(3);
    CHECK(exprs_equal("(x+1)^2/x", "(x^2+2*x+1)/x", F3));
    CHECK_FALSE(exprs_equal("x", "x+1", F3));
}

TEST_CASE("round trip on random values") {
    std::mt19937_64 rng(99);
    for (unsigned q : {2u, 4u, 8u, 3u, 9u, 27u}) {
        auto F = GaloisField::of_size(q);
        for (int t = 0; t < 30; ++t) {
            auto rnd = [&](int maxdeg, bool nonzero) {
                for (;;) {
                    std::vector<unsigned> c(rng() % (maxdeg + 1) + 1);
                    for (auto& v : c) v = static_cast<unsigned>(rng() % q);
                    Polynomial p(F, std::move(c));
                    if (!nonzero || !p.is_zero()) return p;
                }
            };
            RationalFunction f(rnd(5, false), rnd(4, true));
            CHECK(parse_expr(format_canonical(f), F) == f);
        }
    }
}

TEST_CASE("equation text parsing") {
    auto F2 = GaloisField::of_size(2);
    auto cs = parse_equation_text("y^4 + y^3 + (x^3+x)*y^2 + x^4*y + x^8", F2);
    REQUIRE(cs.size() == 5);
    CHECK(cs[4] == RationalFunction::one(F2));
    CHECK(cs[2] == parse_expr("x^3+x", F2));
    CHECK(cs[0] == parse_expr("x^8", F2));
    CHECK_THROWS_AS(parse_equation_text("1/(y+x)", F2), ParseError);
}
