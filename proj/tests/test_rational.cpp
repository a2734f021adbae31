#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/random.hpp"
#include "plie/rational.hpp"

using namespace plie;

TEST_CASE("canonical form and parsing") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("-5").str() == "-5");
    CHECK(Rational::parse("27/2") == Rational(27, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(5, 7).pow(0) == Rational(1));
}

TEST_CASE("field axioms on random values") {
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        Rational a = rng.rational(50, 20), b = rng.rational(50, 20), c = rng.rational(50, 20);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}
