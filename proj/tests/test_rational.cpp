#include <doctest.h>

#include <random>

#include "cycalc/rational.hpp"

using cycalc::CalcError;
using cycalc::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(7) * Rational(3, 7) == Rational(3));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK((Rational(5, 8) / Rational(5, 2)) == Rational(1, 4));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
}

TEST_CASE("rational comparisons cross-multiply") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(-2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(4, 8) <= Rational(1, 2));
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational::parse("45/2") == Rational(45, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), CalcError);
    CHECK_THROWS_AS(Rational::parse("x"), CalcError);
    CHECK_THROWS_AS(Rational::parse(""), CalcError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), CalcError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-5000, 5000);
    std::uniform_int_distribution<long long> den(1, 999);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("division by zero and overflow throw") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), CalcError);
    CHECK_THROWS_AS(Rational(1, 0), CalcError);
    Rational huge(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("integrality accessors") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), CalcError);
}
