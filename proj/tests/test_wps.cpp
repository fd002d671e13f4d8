#include <doctest.h>

#include <random>

#include "cycalc/wps.hpp"

using namespace cycalc;

namespace {

WeightedSpace p11125() {
    WeightedSpace s;
    s.weights = {1, 1, 1, 2, 5};
    s.coordinate_names = default_coordinate_names(5);
    return s;
}

WeightedSpace p1112() {
    WeightedSpace s;
    s.weights = {1, 1, 1, 2};
    s.coordinate_names = default_coordinate_names(4);
    return s;
}

QhPolynomial example_equation(const WeightedSpace& s) {
    return QhPolynomial::parse("x^10+y^10+z^10+w^5-t^2", s.coordinate_names);
}

std::vector<Rational> random_point_in_support(const std::vector<int>& support, size_t n,
                                              std::mt19937& rng) {
    std::uniform_int_distribution<long long> nz(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Rational> pt(n, Rational(0));
    for (int i : support) pt[i] = Rational(sign(rng) ? nz(rng) : -nz(rng));
    return pt;
}

}  // namespace

TEST_CASE("well-formedness: every leave-one-out gcd is one") {
    CHECK(p11125().well_formed());
    CHECK(p1112().well_formed());
    WeightedSpace bad;
    bad.weights = {1, 2, 2};
    bad.coordinate_names = default_coordinate_names(3);
    CHECK_FALSE(bad.well_formed());  // dropping the 1 leaves gcd 2
}

TEST_CASE("polynomial parsing and rendering") {
    WeightedSpace s = p11125();
    QhPolynomial p = example_equation(s);
    CHECK(p.terms().size() == 5);
    CHECK(p.weighted_degree(s.weights) == 10);
    CHECK(QhPolynomial::parse("3/2*x^2*y - y^3", {"x", "y"}).terms().size() == 2);
    CHECK(QhPolynomial::parse("x*x*x", {"x", "y"}).str({"x", "y"}) == "x^3");
    CHECK_THROWS_AS(QhPolynomial::parse("", {"x"}), CalcError);
    CHECK_THROWS_AS(QhPolynomial::parse("x^2 + q", {"x"}), CalcError);
}

TEST_CASE("fixed locus of the weighted quotient example") {
    FixedLocus locus = fixed_locus(p11125(), InvolutionSpec{{1, 1, 1, 1, -1}});
    CHECK_FALSE(locus.fixes_everything);
    REQUIRE(locus.strata.size() == 2);
    // sorted by support: {x,y,z,w} then {w,t}
    CHECK(locus.strata[0].support == std::vector<int>{0, 1, 2, 3});
    CHECK(locus.strata[0].witness_num == 0);  // lambda = 1
    CHECK(locus.strata[0].dimension == 3);
    CHECK(locus.strata[0].kind == StratumKind::surface);
    CHECK(locus.strata[1].support == std::vector<int>{3, 4});
    CHECK(locus.strata[1].witness_num == locus.strata[1].witness_order / 2);  // lambda = -1
    CHECK(locus.strata[1].dimension == 1);
    CHECK(locus.strata[1].kind == StratumKind::isolated_point_candidate);
}

TEST_CASE("identity involution fixes everything") {
    FixedLocus locus = fixed_locus(p11125(), InvolutionSpec{{1, 1, 1, 1, 1}});
    CHECK(locus.fixes_everything);
    REQUIRE(locus.strata.size() == 1);
    CHECK(locus.strata[0].support.size() == 5);
}

TEST_CASE("sign blocks of ordinary projective space") {
    WeightedSpace p5;
    p5.weights = {1, 1, 1, 1, 1, 1};
    p5.coordinate_names = default_coordinate_names(6);
    FixedLocus locus = fixed_locus(p5, InvolutionSpec{{-1, -1, -1, 1, 1, 1}});
    REQUIRE(locus.strata.size() == 2);
    CHECK(locus.strata[0].support == std::vector<int>{0, 1, 2});
    CHECK(locus.strata[1].support == std::vector<int>{3, 4, 5});
    CHECK(locus.strata[0].dimension == 2);
}

TEST_CASE("witnesses satisfy lambda^w = sign exactly (property)") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long long> wd(1, 6);
    std::uniform_int_distribution<int> sd(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedSpace s;
        size_t n = 3 + (size_t)(trial % 3);
        for (size_t i = 0; i < n; ++i) s.weights.push_back(wd(rng));
        s.coordinate_names = default_coordinate_names(n);
        InvolutionSpec inv;
        for (size_t i = 0; i < n; ++i) inv.signs.push_back(sd(rng) ? 1 : -1);
        FixedLocus locus = fixed_locus(s, inv);
        for (const auto& st : locus.strata) {
            for (int i : st.support) {
                long long r = (st.witness_num * s.weights[i]) % st.witness_order;
                int val = r == 0 ? 1 : (r == st.witness_order / 2 ? -1 : 0);
                CHECK(val == inv.signs[i]);
            }
        }
        // supports of maximal strata are pairwise incomparable
        for (size_t a = 0; a < locus.strata.size(); ++a)
            for (size_t b = 0; b < locus.strata.size(); ++b) {
                if (a == b) continue;
                const auto& sa = locus.strata[a].support;
                const auto& sb = locus.strata[b].support;
                bool contained =
                    std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()) && sa != sb;
                CHECK_FALSE(contained);
            }
    }
}

TEST_CASE("generic stratum points are fixed and lie in exactly one stratum") {
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    FixedLocus locus = fixed_locus(s, inv);
    std::mt19937 rng(4242);
    for (const auto& st : locus.strata) {
        for (int rep = 0; rep < 20; ++rep) {
            auto pt = random_point_in_support(st.support, s.weights.size(), rng);
            CHECK(projectively_equal(s, pt, apply_involution(inv, pt)));
            int containing = 0;
            for (const auto& other : locus.strata) {
                bool inside = true;
                for (size_t i = 0; i < pt.size(); ++i)
                    if (!pt[i].is_zero() &&
                        std::find(other.support.begin(), other.support.end(), (int)i) ==
                            other.support.end())
                        inside = false;
                if (inside) ++containing;
            }
            CHECK(containing == 1);
        }
    }
    // generic points of distinct strata are distinct
    auto p0 = random_point_in_support(locus.strata[0].support, 5, rng);
    auto p1 = random_point_in_support(locus.strata[1].support, 5, rng);
    CHECK_FALSE(projectively_equal(s, p0, p1));
}

TEST_CASE("involution applied twice is the identity on 100 random points") {
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    std::mt19937 rng(77);
    std::uniform_int_distribution<long long> c(-9, 9);
    int done = 0;
    while (done < 100) {
        std::vector<Rational> pt;
        for (size_t i = 0; i < 5; ++i) pt.emplace_back(c(rng));
        bool nonzero = false;
        for (const auto& v : pt) nonzero |= !v.is_zero();
        if (!nonzero) continue;
        CHECK(projectively_equal(s, pt, apply_involution(inv, apply_involution(inv, pt))));
        ++done;
    }
}

TEST_CASE("projective equality with weighted rescaling") {
    WeightedSpace s = p11125();
    std::vector<Rational> a{Rational(0), Rational(0), Rational(0), Rational(1), Rational(1)};
    std::vector<Rational> b{Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)};
    std::vector<Rational> c{Rational(0), Rational(0), Rational(0), Rational(1), Rational(2)};
    CHECK(projectively_equal(s, a, b));  // mu = -1 rescales t only
    CHECK_FALSE(projectively_equal(s, a, c));

    // mu = 2 rescaling: x_i -> 2^{w_i} x_i
    std::vector<Rational> p{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    std::vector<Rational> q{Rational(2), Rational(4), Rational(6), Rational(16), Rational(160)};
    CHECK(projectively_equal(s, p, q));
    CHECK_THROWS_AS(projectively_equal(s, std::vector<Rational>(5, Rational(0)), p), CalcError);
}

TEST_CASE("cyclic quotient singularity types") {
    CHECK(singularity_type(p1112(), 3).str() == "1/2(1,1,1)");
    CHECK(singularity_type(p11125(), 4).str() == "1/5(1,1,1,2)");
    CHECK(singularity_type(p11125(), 0).smooth());  // weight-1 point
    WeightedSpace p3;
    p3.weights = {1, 1, 1, 1};
    p3.coordinate_names = default_coordinate_names(4);
    for (int i = 0; i < 4; ++i) CHECK(singularity_type(p3, i).smooth());
    CHECK_THROWS_AS(singularity_type(p1112(), 9), CalcError);
    CHECK_THROWS_AS(singularity_type(p1112(), -1), CalcError);

    // ineffective action is divided out
    WeightedSpace degenerate;
    degenerate.weights = {2, 2};
    degenerate.coordinate_names = default_coordinate_names(2);
    CHECK(singularity_type(degenerate, 0).smooth());

    auto sing = coordinate_singularities(p1112());
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].first == 3);
    CHECK(sing[0].second.str() == "1/2(1,1,1)");
}

TEST_CASE("hypersurface fixed locus of the weighted quotient example") {
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    HypersurfaceFixedLocus hfl = hypersurface_fixed_locus(s, inv, 10, example_equation(s));
    CHECK(hfl.surface_count == 1);
    CHECK(hfl.isolated_point_count == 1);
    REQUIRE(hfl.strata.size() == 2);

    const DecoratedStratum& surf = hfl.strata[0];
    CHECK(surf.stratum.dimension == 2);
    CHECK(surf.stratum.kind == StratumKind::surface);
    CHECK(surf.restricted_equation.find("w^5") != std::string::npos);
    CHECK(surf.restricted_equation.find("t") == std::string::npos);

    const DecoratedStratum& pts = hfl.strata[1];
    CHECK(pts.stratum.dimension == 0);
    REQUIRE(pts.points.size() == 1);
    const IsolatedPoint& p = pts.points[0];
    REQUIRE(p.is_exact());
    CHECK(p.simple);
    // the point is (0,0,0,1,1) — not the coordinate point e_t, which fails
    // the equation
    std::vector<Rational> expected{Rational(0), Rational(0), Rational(0), Rational(1),
                                   Rational(1)};
    for (size_t i = 0; i < 5; ++i) {
        REQUIRE(p.exact[i].is_rational());
        CHECK(p.exact[i].rational_part() == expected[i]);
    }
    std::vector<Rational> e_t{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
    CHECK_FALSE(example_equation(s).eval_rational(e_t).is_zero());
    CHECK(example_equation(s).eval_rational(expected).is_zero());
    CHECK_FALSE(projectively_equal(s, expected, e_t));
}

TEST_CASE("hypersurface fixed locus rejects bad input") {
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    SUBCASE("zero polynomial") {
        QhPolynomial zero;
        CHECK_THROWS_WITH_AS(hypersurface_fixed_locus(s, inv, 10, zero),
                             doctest::Contains("zero polynomial"), CalcError);
    }
    SUBCASE("wrong degree") {
        CHECK_THROWS_AS(hypersurface_fixed_locus(s, inv, 12, example_equation(s)), CalcError);
    }
    SUBCASE("not semi-invariant, offending monomial named") {
        QhPolynomial mixed =
            QhPolynomial::parse("x^10+y^10+z^10+w^5-t^2+x^5*t", s.coordinate_names);
        CHECK_THROWS_WITH_AS(hypersurface_fixed_locus(s, inv, 10, mixed),
                             doctest::Contains("x^5*t"), CalcError);
    }
}

TEST_CASE("identity involution is a flagged result, not an error") {
    WeightedSpace s = p11125();
    HypersurfaceFixedLocus hfl =
        hypersurface_fixed_locus(s, InvolutionSpec{{1, 1, 1, 1, 1}}, 10, example_equation(s));
    CHECK(hfl.fixes_everything);
}

TEST_CASE("numeric line solving with certified residuals") {
    // t^2 = 2 w^5 forces sqrt(2)-sized roots: numeric mode with the orbit
    // identification still yields one point.
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    QhPolynomial p = QhPolynomial::parse("x^10+y^10+z^10+2*w^5-t^2", s.coordinate_names);
    HypersurfaceFixedLocus hfl = hypersurface_fixed_locus(s, inv, 10, p);
    CHECK(hfl.isolated_point_count == 1);
    const auto& pts = hfl.strata[1].points;
    REQUIRE(pts.size() == 1);
    CHECK_FALSE(pts[0].is_exact());
    CHECK(pts[0].residual < 1e-9);
    CHECK(pts[0].simple);

    // trinomial restriction: Durand-Kerner path on the curve stratum
    WeightedSpace s112;
    s112.weights = {1, 1, 2};
    s112.coordinate_names = default_coordinate_names(3);
    QhPolynomial q = QhPolynomial::parse("x^4+x^2*y^2+y^4-z^2", s112.coordinate_names);
    HypersurfaceFixedLocus h2 =
        hypersurface_fixed_locus(s112, InvolutionSpec{{1, 1, -1}}, 4, q);
    REQUIRE(h2.strata.size() >= 1);
    long long pts2 = 0;
    for (const auto& ds : h2.strata)
        if (ds.stratum.dimension == 0) pts2 += (long long)ds.points.size();
    CHECK(pts2 == 4);  // x^4 + x^2 + 1 has four simple roots on the chart
    for (const auto& ds : h2.strata)
        for (const auto& pt : ds.points) {
            CHECK(pt.residual < 1e-9);
            CHECK(pt.simple);
        }
}

TEST_CASE("quotient projection verification") {
    WeightedSpace s = p11125();
    InvolutionSpec inv{{1, 1, 1, 1, -1}};
    QuotientProjectionReport rep = verify_quotient_projection(s, inv, 10, example_equation(s));
    CHECK(rep.all_pass());
    CHECK(rep.dropped_coordinate == 4);
    CHECK(rep.target.weights == std::vector<long long>{1, 1, 1, 2});
    REQUIRE(rep.target_singularities.size() == 1);
    CHECK(rep.target_singularities[0].first == 3);
    CHECK(rep.target_singularities[0].second.str() == "1/2(1,1,1)");

    // generic target has two preimages, the singular point one
    std::vector<Rational> e0{Rational(1), Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> ew{Rational(0), Rational(0), Rational(0), Rational(1)};
    std::vector<Rational> branch{Rational(1), Rational(0), Rational(0), Rational(-1)};
    CHECK(projection_preimage_count(s, inv, 10, example_equation(s), e0) == 2);
    CHECK(projection_preimage_count(s, inv, 10, example_equation(s), ew) == 1);
    CHECK(projection_preimage_count(s, inv, 10, example_equation(s), branch) == 1);

    // pattern guard
    CHECK_THROWS_AS(
        verify_quotient_projection(s, InvolutionSpec{{1, 1, -1, 1, -1}}, 10, example_equation(s)),
        CalcError);
}
