#include <catch2/catch_amalgamated.hpp>

#include <sievebound/irreducibility.hpp>
#include <sievebound/polynomial.hpp>

using namespace sievebound;

TEST_CASE("parse: coefficient list") {
    const auto f = parse_polynomial("2,0,0,1");
    CHECK(f.degree() == 3);
    CHECK(f.to_string() == "x^3+2");
    CHECK(parse_polynomial("-1, 0, 1").to_string() == "x^2-1");
    CHECK_THROWS_AS(parse_polynomial("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2,a"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1,-1"), ParseError);  // negative leading coefficient
}

TEST_CASE("parse: expression grammar") {
    CHECK(parse_polynomial("x^3+2").to_string() == "x^3+2");
    CHECK(parse_polynomial("2*x^4-3*x+7").to_string() == "2*x^4-3*x+7");
    CHECK(parse_polynomial("2x^4 - 3x + 7").to_string() == "2*x^4-3*x+7");
    CHECK(parse_polynomial("x*x + x - 1 + x^2").to_string() == "2*x^2+x-1");
    CHECK(parse_polynomial("-x + x^2").to_string() == "x^2-x");
    CHECK(parse_polynomial("x").degree() == 1);
}

TEST_CASE("parse: rejects malformed input") {
    CHECK_THROWS_AS(parse_polynomial("x^+3"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x+"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("7"), ParseError);       // degree 0
    CHECK_THROWS_AS(parse_polynomial("-x^2+1"), ParseError);  // negative leading coefficient
    CHECK_THROWS_AS(parse_polynomial("x^2-x^2+x-x"), ParseError);  // collapses to zero
}

TEST_CASE("evaluation is exact") {
    const auto f = parse_polynomial("x^3+2");
    CHECK(f(0) == 2);
    CHECK(f(10) == 1002);
    CHECK(parse_polynomial("x")(7) == 7);
    CHECK(f(-10) == -998);
    // values beyond 64 bits
    const mpz_class big("10000000000000000000");
    CHECK(f(big) == big * big * big + 2);
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(IntPolynomial({mpz_class(1)}), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial({mpz_class(1), mpz_class(-2)}), std::invalid_argument);
    // trailing zero coefficients are stripped before validation
    const IntPolynomial f({mpz_class(3), mpz_class(1), mpz_class(0)});
    CHECK(f.degree() == 1);
    CHECK(f.content() == 1);
    CHECK(parse_polynomial("2,4,6").content() == 2);
}

TEST_CASE("rational root screen") {
    CHECK(has_rational_root(parse_polynomial("x^2-1")));       // roots 1, -1
    CHECK(has_rational_root(parse_polynomial("x^2+3*x+2")));   // roots -1, -2
    CHECK(has_rational_root(parse_polynomial("2*x^2-x-1")));   // root -1/2
    CHECK(has_rational_root(parse_polynomial("0,0,1")));       // x^2, root 0
    CHECK_FALSE(has_rational_root(parse_polynomial("x^3+2")));
    CHECK_FALSE(has_rational_root(parse_polynomial("x^2+1")));
    CHECK_FALSE(has_rational_root(parse_polynomial("x+2")));   // degree 1: no screen
}
