#include <doctest.h>

#include <random>

#include "cycalc/cyclotomic.hpp"

using namespace cycalc;

namespace {
Cyc random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<long long> small(-3, 3);
    Cyc acc;
    for (int i = 0; i < Cyc::kDegree; ++i)
        acc = acc + Rational(small(rng)) * Cyc::zeta_pow(i);
    return acc;
}
}  // namespace

TEST_CASE("zeta is a primitive 24th root of unity") {
    Cyc z = Cyc::zeta_pow(1);
    CHECK(z.pow(24) == Cyc(Rational(1)));
    for (int j = 1; j < 24; ++j) CHECK_FALSE(z.pow(j) == Cyc(Rational(1)));
    CHECK(Cyc::zeta_pow(12) == Cyc(Rational(-1)));
    // minimal polynomial: z^8 = z^4 - 1
    CHECK(z.pow(8) == z.pow(4) - Cyc(Rational(1)));
}

TEST_CASE("square roots of the supported squarefree integers") {
    for (long long d : {1LL, -1LL, 2LL, -2LL, 3LL, -3LL, 6LL, -6LL}) {
        Cyc s = Cyc::sqrt_squarefree(d);
        CHECK(s * s == Cyc(Rational(d)));
    }
    CHECK_THROWS_AS(Cyc::sqrt_squarefree(5), CalcError);
}

TEST_CASE("field inverse via the multiplication matrix") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Cyc a = random_cyc(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyc(Rational(1)));
    }
    CHECK_THROWS_AS(Cyc().inverse(), CalcError);
}

TEST_CASE("polar form detection") {
    Cyc v = Rational(3, 2) * Cyc::zeta_pow(5);
    auto p = v.polar_form();
    REQUIRE(p.has_value());
    CHECK(p->magnitude == Rational(3, 2));
    CHECK(p->power == 5);

    // negative rational folds the sign into the angle
    auto q = Cyc(Rational(-2)).polar_form();
    REQUIRE(q.has_value());
    CHECK(q->magnitude == Rational(2));
    CHECK(q->power == 12);

    // a generic sum is not of that shape
    CHECK_FALSE((Cyc(Rational(1)) + Cyc::zeta_pow(1)).polar_form().has_value());
}

TEST_CASE("nth roots in the field") {
    // square roots of a primitive cube root of unity: +/- zeta_6
    Cyc omega = Cyc::zeta_pow(8);
    auto roots = nth_roots_in_field(omega, 2);
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 2);
    for (const auto& r : *roots) CHECK(r * r == omega);

    // 4th roots of -1 exist (mu_8 in mu_24)
    auto r4 = nth_roots_in_field(Cyc(Rational(-1)), 4);
    REQUIRE(r4.has_value());
    for (const auto& r : *r4) CHECK(r.pow(4) == Cyc(Rational(-1)));

    // d-th roots with mu_d not inside mu_24 are rejected
    CHECK_FALSE(nth_roots_in_field(Cyc(Rational(1)), 5).has_value());
    // non-perfect-power magnitudes are rejected
    CHECK_FALSE(nth_roots_in_field(Cyc(Rational(2)), 2).has_value());
    // 8 = 2^3 works
    auto r3 = nth_roots_in_field(Cyc(Rational(8)), 3);
    REQUIRE(r3.has_value());
    CHECK(r3->size() == 3);
}

TEST_CASE("rational square roots in the field") {
    auto s = sqrt_rational_in_field(Rational(-3));
    REQUIRE(s.has_value());
    CHECK(*s * *s == Cyc(Rational(-3)));
    auto t = sqrt_rational_in_field(Rational(9, 4));
    REQUIRE(t.has_value());
    CHECK(*t * *t == Cyc(Rational(9, 4)));
    auto u = sqrt_rational_in_field(Rational(-12));  // = 4 * (-3)
    REQUIRE(u.has_value());
    CHECK(*u * *u == Cyc(Rational(-12)));
    CHECK_FALSE(sqrt_rational_in_field(Rational(5)).has_value());
}

TEST_CASE("split_square and exact_nth_root") {
    CHECK(split_square(-12) == std::pair<long long, long long>{2, -3});
    CHECK(split_square(49) == std::pair<long long, long long>{7, 1});
    CHECK(exact_nth_root(Rational(27, 8), 3) == Rational(3, 2));
    CHECK(exact_nth_root(Rational(-32), 5) == Rational(-2));
    CHECK_FALSE(exact_nth_root(Rational(2), 2).has_value());
    CHECK_FALSE(exact_nth_root(Rational(-4), 2).has_value());
}

TEST_CASE("approx matches the exact value") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Cyc a = random_cyc(rng), b = random_cyc(rng);
        auto lhs = (a * b).approx();
        auto rhs = a.approx() * b.approx();
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}
