// Exact arithmetic in the 24th cyclotomic field.
//
// Elements are polynomials of degree < 8 in z = e^{i pi / 12} with rational
// coefficients, reduced modulo the minimal polynomial z^8 = z^4 - 1.  The
// field contains i, sqrt(±2), sqrt(±3), sqrt(±6) and every root of unity of
// order dividing 24, which covers the coordinates arising from the
// sign-involution fixed-point enumerations.
#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cycalc/rational.hpp"

namespace cycalc {

class Cyc {
public:
    static constexpr int kDegree = 8;
    static constexpr int kOrder = 24;

    Cyc() = default;
    Cyc(const Rational& r) { c_[0] = r; }  // NOLINT: implicit by design
    Cyc(long long n) { c_[0] = Rational(n); }  // NOLINT

    static Cyc zeta_pow(long long j);  // z^j, j taken mod 24
    // Square root of a squarefree integer in {1, -1, ±2, ±3, ±6}.
    static Cyc sqrt_squarefree(long long d);

    const Rational& coeff(int i) const { return c_[i]; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws unless rational

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Rational& r, const Cyc& a);
    Cyc operator-() const;
    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc pow(long long e) const;  // e >= 0
    Cyc inverse() const;         // throws on zero
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    std::complex<double> approx() const;

    // If the value equals q * z^j with rational q >= 0, returns (q, j).
    struct PolarForm {
        Rational magnitude;
        int power = 0;
    };
    std::optional<PolarForm> polar_form() const;

    std::string str() const;  // polynomial in z

private:
    std::array<Rational, kDegree> c_{};
};

// Every n-th root of `value` when the full root set lies in the field
// (value a non-negative-rational multiple of a root of unity, the radical
// rational, and mu_n inside mu_24); nullopt otherwise.  value = 0 gives {0}.
std::optional<std::vector<Cyc>> nth_roots_in_field(const Cyc& value, long long n);

// One square root of a rational inside the field (the other is its
// negative): r = t^2 * d with d squarefree in the supported set.
std::optional<Cyc> sqrt_rational_in_field(const Rational& r);

// Largest square divisor split: n = t^2 * d with d squarefree (|n| modest;
// trial division).  Returns (t, d) preserving sign on d.
std::pair<long long, long long> split_square(long long n);

// Exact n-th root of a rational if it is a perfect n-th power.
std::optional<Rational> exact_nth_root(const Rational& r, long long n);

}  // namespace cycalc
