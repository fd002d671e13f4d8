// Numerical invariants of the Calabi-Yau double cover X of a Q-Fano
// quotient Y: H^3, H.c2 and the topological Euler characteristic, computed
// from the quotient data (class-group degree d = |H'^3|, involution index
// s, half-point count N, Euler characteristics of Y and of the branch
// surface).
#pragma once

#include <optional>

#include "cycalc/divisor.hpp"

namespace cycalc {

struct QuotientData {
    Rational d;                            // |H'^3|
    long long s = 0;                       // branch class = s H'
    long long N = 0;                       // half-points on Y
    std::optional<Rational> euler_Y;
    std::optional<Rational> c2_dot_Hprime; // defaults to (2/s)(24 - (3/2)N)

    Rational c2_dot_hprime_value() const;
    void validate() const;
};

// H^3 = 2|H'^3|.  Throws on non-positive degree.
Rational h3_of_cover(const Rational& d);

// H.c2(X) = (4/s)(24 - (3/2)N) + (s^2/4) H^3, from c2(X) = phi* c2(Y) + R^2
// with ramification class R = (s/2)H.  Exact rational in general, integral
// on every classification row.
Rational hc2_of_cover(long long s, long long N, const Rational& h3);

// Euler characteristic of a smooth surface S in |D| avoiding the
// half-points: e(S) = (c2 - D.c1 + D^2).D evaluated in the space's model.
Rational surface_euler(const SpaceModel& space, const DivisorClass& D);

// e(X) = 2 e(Y) - e(S) - N, from additivity across the blow-up/cover square.
Rational euler_of_cover(const Rational& euler_Y, const Rational& euler_S, long long N);

// Tabulated involution index from the Fano index r_Y/2 (where -2K_Y = r_Y H_Y
// with H_Y the primitive Cartier polarization).  s is the coefficient on the
// Weil class-group generator H': s = 2*r_half when H_Y = H', doubled when the
// primitive Cartier class is 2H'.  Half-integral indices force the doubling;
// for integral indices it is an input flag (both cases occur among the
// index-one quotients).
long long s_from_fano_index(const Rational& r_half, bool hprime_not_cartier = false);

// Builds the quotient's numerical space model (one generator) from the data:
// triple H'^3 = d, c1 = (s/2)H', c2.H' defaulted as in QuotientData.
SpaceModel quotient_space_model(const QuotientData& q, const std::string& id = "Y",
                                const std::string& hprime = "H'");

struct CoverInvariants {
    Rational h3;
    Rational hc2;
    std::optional<Rational> euler;
    std::optional<Rational> euler_S;  // the branch-surface value used
};

// One-call pipeline: H^3, H.c2 and, when e(Y) is known, e(X) with the branch
// surface S in |s H'| evaluated through surface_euler (or an explicit e(S)).
CoverInvariants cover_invariants(const QuotientData& q,
                                 std::optional<Rational> euler_S = std::nullopt);

}  // namespace cycalc
