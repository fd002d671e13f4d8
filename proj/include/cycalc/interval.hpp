// Minimal outward-rounded interval arithmetic, enough to certify numeric
// residuals and Jacobian determinants.  Every endpoint operation widens by
// one ulp, so the true value always stays inside.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "cycalc/rational.hpp"

namespace cycalc {

struct Interval {
    double lo = 0.0, hi = 0.0;

    static Interval exact(double v) { return {v, v}; }
    static Interval widen(double a, double b) {
        return {std::nextafter(std::min(a, b), -INFINITY),
                std::nextafter(std::max(a, b), INFINITY)};
    }
    static Interval from_rational(const Rational& r) {
        double v = r.to_double();
        return {std::nextafter(v, -INFINITY), std::nextafter(v, INFINITY)};
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return widen(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return widen(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::nextafter(std::min({p1, p2, p3, p4}), -INFINITY),
                std::nextafter(std::max({p1, p2, p3, p4}), INFINITY)};
    }
    Interval operator-() const { return {-hi, -lo}; }

    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    double mag_upper() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    double mag_lower() const {
        if (contains_zero()) return 0.0;
        return std::min(std::fabs(lo), std::fabs(hi));
    }
};

// Rectangular complex interval.
struct CInterval {
    Interval re, im;

    static CInterval exact(std::complex<double> z) {
        return {Interval::exact(z.real()), Interval::exact(z.imag())};
    }
    static CInterval from_rational(const Rational& r) {
        return {Interval::from_rational(r), Interval::exact(0.0)};
    }

    friend CInterval operator+(const CInterval& a, const CInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CInterval operator-(const CInterval& a, const CInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    CInterval pow(long long e) const {
        CInterval r = exact({1.0, 0.0});
        CInterval base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Upper/lower bounds on |z|^2.
    double abs2_upper() const {
        Interval a = re * re + im * im;
        return a.hi;
    }
    double abs2_lower() const {
        Interval a = re * re + im * im;
        return std::max(a.lo, 0.0);
    }
};

}  // namespace cycalc
