// Riemann-Roch arithmetic for resolutions of half-point quotients.
//
// The quotient of a Calabi-Yau threefold by an involution acting by -1 on
// the holomorphic 3-form has chi(O) = 1; resolving its k half-points by
// exceptional planes F_i (normal degree -2, so c2|F_i = -3) turns
// chi = (1/24) c1.c2 into the fixed-point count.  These helpers keep every
// step exact.
#pragma once

#include <string>
#include <vector>

#include "cycalc/rational.hpp"

namespace cycalc {

// Homogeneous-plane Chern restriction: a plane with normal twist b inside a
// threefold has c2(ambient)|plane = b*c1(P2) + c2(P2) in degree, i.e. 3b + 3.
// b = -2 is the half-point resolution plane; b = -1 the ordinary point
// blow-up (value 0); anything else is an extrapolation of the same formula.
Rational c2_restriction(long long normal_degree);
bool c2_restriction_is_extrapolated(long long normal_degree);

struct ChernRestriction {
    long long normal_degree = 0;
    Rational c2_value;
    bool extrapolated = false;
};
ChernRestriction chern_restriction(long long normal_degree);

// chi(O of the resolution) = (-K.c2)/24 + k/16: the ambient term plus one
// 1/16 = -(1/48)*(-3) per exceptional plane.
Rational chi_of_resolution(const Rational& minus_K_dot_c2, long long k);

struct IsolatedCount {
    long long k = 0;
    // chi = 0 would force a fixed-point-free involution, which contradicts
    // chi(O_Y) = 1; reported rather than thrown.
    bool fixed_point_free_contradiction = false;
};

// Inverts chi = k/16 in the zero-dimensional regime.  Throws
// "inconsistent-diagram" unless 16*chi is a non-negative integer.
IsolatedCount solve_isolated_count(const Rational& chi_Y);

// -K_Y . c2(Y) for a quotient with N half-points: the unique value making
// chi(O_Y) = 1, namely 24 - (3/2) N.  (c2 of the singular Y is read through
// its resolution; validated row-by-row against the classification tables.)
Rational minus_K_dot_c2(long long N);

// Step-by-step derivation of the sixteen-fixed-point count, each line one
// identity applied with its exact value.
struct DerivationTrace {
    std::vector<std::string> lines;
    long long k = 0;
};
DerivationTrace sixteen_point_derivation();

}  // namespace cycalc
