// Isolated fixed points of coordinate-sign involutions on Fermat-type
// complete intersections in ordinary projective space.
//
// The fixed locus of the sign action splits P^n into the plus- and
// minus-coordinate subspaces; on each the restricted Fermat system is solved
// exactly over the 24th cyclotomic field when the reduction pattern allows
// (binary forms, and the conic-plus-double-degree pair), with a certified
// numeric fallback.  Every reported point carries a nonsingularity witness;
// the enumerated count must match the Bezout product on each stratum.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cycalc/cyclotomic.hpp"

namespace cycalc {

struct FermatEquation {
    long long degree = 0;
    std::vector<Rational> coeffs;  // one per ambient coordinate: sum c_i x_i^degree
};

struct FermatSystem {
    size_t ambient_dim = 0;  // n for P^n
    std::vector<FermatEquation> equations;
    std::vector<int> signs;  // ±1 per coordinate

    size_t coord_count() const { return ambient_dim + 1; }
    void validate() const;  // arity, degrees, semi-invariance
};

struct FermatPoint {
    std::vector<Cyc> exact;                    // empty in numeric mode
    std::vector<std::complex<double>> approx;  // max-norm-1 in numeric mode
    int stratum = 0;                           // index into FermatCount::strata
    bool jacobian_full_rank = false;
    double max_residual = 0.0;                 // certified bound, 0 in exact mode
    bool is_exact() const { return !exact.empty(); }
};

struct FermatStratum {
    std::vector<int> support;
    long long count = 0;
    long long bezout = -1;  // product of restricted degrees; -1 if not square
    bool exact_mode = true;
};

struct FermatCount {
    long long count = 0;
    bool identity_involution = false;  // the sign action is projectively trivial
    std::vector<FermatStratum> strata;
    std::vector<FermatPoint> points;   // canonical order: stratum, then coordinates
};

// Counts and enumerates the isolated fixed points.  Throws
// "not-zero-dimensional" when a stratum meets the variety in positive
// dimension, "not-transversal" when some solution lacks a full-rank Jacobian
// witness, and "count-mismatch" when the enumeration disagrees with the
// Bezout count on a certified stratum.
FermatCount count_fixed_points(const FermatSystem& sys);

// The certified points (count_fixed_points' enumeration).
std::vector<FermatPoint> list_fixed_points(const FermatSystem& sys);

// "d:c0,c1,...;d2:c0,..." equations parser used by the CLI.
std::vector<FermatEquation> parse_fermat_equations(const std::string& text,
                                                   size_t coord_count);

}  // namespace cycalc
