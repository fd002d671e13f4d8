// Weighted projective spaces with diagonal sign involutions: well-formedness,
// fixed-locus stratification, cyclic quotient singularity types at coordinate
// points, hypersurface fixed loci and the double-cover projection check.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cycalc/cyclotomic.hpp"
#include "cycalc/qhpoly.hpp"

namespace cycalc {

struct WeightedSpace {
    std::vector<long long> weights;
    std::vector<std::string> coordinate_names;

    size_t dim() const { return weights.empty() ? 0 : weights.size() - 1; }
    long long lcm_weights() const;
    // gcd of every n-element subset of the n+1 weights is 1, i.e. every
    // leave-one-out gcd is 1.
    bool well_formed() const;
    void validate() const;  // positive weights, names parallel (or defaulted)
};

// Default coordinate labels: x,y,z,w,t for up to five, x0..xn beyond.
std::vector<std::string> default_coordinate_names(size_t count);

struct InvolutionSpec {
    std::vector<int> signs;  // entries in {+1, -1}

    void validate(const WeightedSpace& space) const;
    bool is_trivial_action() const;  // all +1 (literal identity)
};

enum class StratumKind { isolated_point_candidate, surface, other };
std::string to_string(StratumKind k);

struct FixedStratum {
    std::vector<int> support;    // coordinate indices allowed nonzero
    long long witness_num = 0;   // lambda = zeta_{2L}^{witness_num}
    long long witness_order = 1; // 2L
    int dimension = 0;           // of the stratum (ambient or on X, per context)
    StratumKind kind = StratumKind::other;
};

struct FixedLocus {
    std::vector<FixedStratum> strata;  // maximal, sorted by (support, witness)
    bool fixes_everything = false;     // involution projectively trivial
};

// Complete stratification of the projectively fixed points: witnesses range
// over the 2*lcm(weights)-th roots of unity, which suffices because any
// witness satisfies lambda^{w_i} = ±1 on its support.  Supports strictly
// contained in another fixable support are dropped (their points lie in the
// bigger stratum).  Kind anticipates one hypersurface section: ambient
// dimension <= 1 can only leave isolated points, ambient dimension 3 leaves
// a surface.
FixedLocus fixed_locus(const WeightedSpace& space, const InvolutionSpec& inv);

struct CyclicSingularity {
    long long order = 1;             // 1 = smooth
    std::vector<long long> weights;  // residues of the other weights, reduced
    bool smooth() const { return order == 1; }
    std::string str() const;  // e.g. "1/2(1,1,1)"
};

// Type of the cyclic quotient singularity of the space at the coordinate
// point e_i: order w_i acting with the residues of the other weights; the
// ineffective part of the action is divided out.
CyclicSingularity singularity_type(const WeightedSpace& space, int coordinate_index);

// All singular coordinate points.
std::vector<std::pair<int, CyclicSingularity>> coordinate_singularities(
    const WeightedSpace& space);

struct IsolatedPoint {
    std::vector<Cyc> exact;                     // empty in numeric mode
    std::vector<std::complex<double>> approx;   // always filled
    bool simple = true;                          // multiplicity-one section point
    double residual = 0.0;                       // certified bound (0 exact)
    bool is_exact() const { return !exact.empty(); }
};

struct DecoratedStratum {
    FixedStratum stratum;                  // dimension/kind refer to the locus on X
    bool contained_in_hypersurface = false;
    std::string restricted_equation;       // in the ambient coordinate names
    std::vector<IsolatedPoint> points;     // filled when the locus is 0-dimensional
};

struct HypersurfaceFixedLocus {
    std::vector<DecoratedStratum> strata;
    long long surface_count = 0;
    long long isolated_point_count = 0;
    bool fixes_everything = false;
};

// Restricts the hypersurface to every fixed stratum and reports the fixed
// locus on X: surface components carry their equation; zero-dimensional
// pieces are solved (exact cyclotomic coordinates in the supported patterns,
// certified numeric otherwise).  The polynomial must be nonzero,
// quasi-homogeneous of the stated degree and semi-invariant under the
// involution.
HypersurfaceFixedLocus hypersurface_fixed_locus(const WeightedSpace& space,
                                                const InvolutionSpec& inv,
                                                long long degree,
                                                const QhPolynomial& poly);

// Exact projective equality with weighted rescaling: x ~ y iff supports
// match and some scalar mu has mu^{w_i} x_i = y_i for all i.  Solvability is
// decided through the gcd combination of the supported weights, with no root
// extraction.
bool projectively_equal(const WeightedSpace& space, const std::vector<Rational>& x,
                        const std::vector<Rational>& y);
bool projectively_equal(const WeightedSpace& space, const std::vector<Cyc>& x,
                        const std::vector<Cyc>& y);

std::vector<Rational> apply_involution(const InvolutionSpec& inv,
                                       const std::vector<Rational>& x);
std::vector<Cyc> apply_involution(const InvolutionSpec& inv, const std::vector<Cyc>& x);

struct QuotientCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct QuotientProjectionReport {
    std::vector<QuotientCheck> checks;
    WeightedSpace target;                              // projection image
    int dropped_coordinate = -1;
    std::vector<std::pair<int, CyclicSingularity>> target_singularities;
    bool all_pass() const;
};

// For the double-cover pattern (exactly one negated coordinate t entering
// the equation only through c*t^2): verifies that the coordinate projection
// is invariant, that a generic target has exactly two preimages t = ±sqrt(f),
// and that the branch image is {f = 0} together with the coordinate points
// where the weighted rescaling identifies t with -t.
QuotientProjectionReport verify_quotient_projection(const WeightedSpace& space,
                                                    const InvolutionSpec& inv,
                                                    long long degree,
                                                    const QhPolynomial& poly);

// Number of preimages of a rational target point under that projection.
long long projection_preimage_count(const WeightedSpace& space, const InvolutionSpec& inv,
                                    long long degree, const QhPolynomial& poly,
                                    const std::vector<Rational>& target);

}  // namespace cycalc
