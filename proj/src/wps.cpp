#include "cycalc/wps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace cycalc {

long long WeightedSpace::lcm_weights() const {
    long long l = 1;
    for (long long w : weights) l = std::lcm(l, w);
    return l;
}

bool WeightedSpace::well_formed() const {
    if (weights.size() < 2) return false;
    for (size_t skip = 0; skip < weights.size(); ++skip) {
        long long g = 0;
        for (size_t i = 0; i < weights.size(); ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) return false;
    }
    return true;
}

void WeightedSpace::validate() const {
    if (weights.size() < 2)
        throw CalcError("bad-space", "weighted space needs at least two coordinates");
    for (long long w : weights)
        if (w <= 0) throw CalcError("bad-space", "weights must be positive");
    if (coordinate_names.size() != weights.size())
        throw CalcError("bad-space", "coordinate names must parallel the weights");
}

std::vector<std::string> default_coordinate_names(size_t count) {
    static const char* kShort[] = {"x", "y", "z", "w", "t"};
    std::vector<std::string> names;
    if (count <= 5) {
        for (size_t i = 0; i < count; ++i) names.emplace_back(kShort[i]);
    } else {
        for (size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

void InvolutionSpec::validate(const WeightedSpace& space) const {
    if (signs.size() != space.weights.size())
        throw CalcError("bad-involution", "sign list must parallel the coordinates");
    for (int s : signs)
        if (s != 1 && s != -1) throw CalcError("bad-involution", "signs must be +1 or -1");
}

bool InvolutionSpec::is_trivial_action() const {
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

std::string to_string(StratumKind k) {
    switch (k) {
        case StratumKind::isolated_point_candidate: return "isolated-point-candidate";
        case StratumKind::surface: return "surface";
        case StratumKind::other: return "other";
    }
    return "?";
}

static StratumKind kind_for_ambient_dim(int dim) {
    if (dim <= 1) return StratumKind::isolated_point_candidate;
    if (dim == 3) return StratumKind::surface;
    return StratumKind::other;
}

static StratumKind kind_for_locus_dim(int dim) {
    if (dim == 0) return StratumKind::isolated_point_candidate;
    if (dim == 2) return StratumKind::surface;
    return StratumKind::other;
}

FixedLocus fixed_locus(const WeightedSpace& space, const InvolutionSpec& inv) {
    space.validate();
    inv.validate(space);
    const long long order = 2 * space.lcm_weights();  // witnesses in mu_order
    const size_t n = space.weights.size();

    // support(j) = { i : zeta_order^(j w_i) = signs_i }, i.e. j*w_i = 0 or
    // order/2 (mod order) with the matching sign.
    std::map<std::vector<int>, long long> supports;  // support -> smallest witness
    for (long long j = 0; j < order; ++j) {
        std::vector<int> support;
        for (size_t i = 0; i < n; ++i) {
            long long r = (j * space.weights[i]) % order;
            int value = r == 0 ? 1 : (r == order / 2 ? -1 : 0);
            if (value == inv.signs[i]) support.push_back((int)i);
        }
        if (support.empty()) continue;
        auto [it, inserted] = supports.emplace(support, j);
        if (!inserted) it->second = std::min(it->second, j);
    }

    FixedLocus out;
    for (const auto& [support, witness] : supports) {
        bool maximal = true;
        for (const auto& [other, w2] : supports) {
            if (other.size() <= support.size()) continue;
            if (std::includes(other.begin(), other.end(), support.begin(), support.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        FixedStratum s;
        s.support = support;
        s.witness_num = witness;
        s.witness_order = order;
        s.dimension = (int)support.size() - 1;
        s.kind = kind_for_ambient_dim(s.dimension);
        if (support.size() == n) out.fixes_everything = true;
        out.strata.push_back(std::move(s));
    }
    std::sort(out.strata.begin(), out.strata.end(),
              [](const FixedStratum& a, const FixedStratum& b) {
                  return std::tie(a.support, a.witness_num) < std::tie(b.support, b.witness_num);
              });
    return out;
}

std::string CyclicSingularity::str() const {
    if (smooth()) return "smooth";
    std::string s = "1/" + std::to_string(order) + "(";
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights[i]);
    }
    return s + ")";
}

CyclicSingularity singularity_type(const WeightedSpace& space, int coordinate_index) {
    space.validate();
    if (coordinate_index < 0 || (size_t)coordinate_index >= space.weights.size())
        throw CalcError("bad-point", "not a coordinate point of the space");
    long long m = space.weights[coordinate_index];
    CyclicSingularity out;
    if (m == 1) return out;
    std::vector<long long> residues;
    long long g = m;
    for (size_t j = 0; j < space.weights.size(); ++j) {
        if ((int)j == coordinate_index) continue;
        long long a = space.weights[j] % m;
        residues.push_back(a);
        g = std::gcd(g, a);
    }
    // Divide out the ineffective part of the action.
    long long effective = m / g;
    if (effective == 1) return out;
    out.order = effective;
    for (long long a : residues) out.weights.push_back((a / g) % effective);
    return out;
}

std::vector<std::pair<int, CyclicSingularity>> coordinate_singularities(
    const WeightedSpace& space) {
    std::vector<std::pair<int, CyclicSingularity>> out;
    for (size_t i = 0; i < space.weights.size(); ++i) {
        CyclicSingularity t = singularity_type(space, (int)i);
        if (!t.smooth()) out.emplace_back((int)i, t);
    }
    return out;
}

// --------------------------------------------------------------------------
// Projective equality through the gcd combination of the supported weights.

namespace {

long long gcd_combination(const std::vector<long long>& values, std::vector<long long>& coeffs) {
    coeffs.assign(values.size(), 0);
    long long g = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (g == 0) {
            g = values[i];
            coeffs[i] = 1;
            continue;
        }
        // extended gcd of (g, values[i])
        long long a = g, b = values[i];
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            long long q = a / b;
            std::tie(a, b) = std::make_tuple(b, a - q * b);
            std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
        }
        for (size_t j = 0; j < i; ++j) coeffs[j] = coeffs[j] * x0;
        coeffs[i] = y0;
        g = a;
    }
    return g;
}

template <typename F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
    static Rational one() { return Rational(1); }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational pow(const Rational& a, long long e) {
        return e >= 0 ? a.pow((int)e) : (Rational(1) / a).pow((int)-e);
    }
};

template <>
struct FieldOps<Cyc> {
    static bool is_zero(const Cyc& v) { return v.is_zero(); }
    static Cyc div(const Cyc& a, const Cyc& b) { return a / b; }
    static Cyc one() { return Cyc(Rational(1)); }
    static Cyc mul(const Cyc& a, const Cyc& b) { return a * b; }
    static Cyc pow(const Cyc& a, long long e) {
        return e >= 0 ? a.pow(e) : a.inverse().pow(-e);
    }
};

template <typename F>
bool projectively_equal_impl(const WeightedSpace& space, const std::vector<F>& x,
                             const std::vector<F>& y) {
    using Ops = FieldOps<F>;
    if (x.size() != space.weights.size() || y.size() != space.weights.size())
        throw CalcError("bad-point", "coordinate arity mismatch");
    bool x_zero = true, y_zero = true;
    for (size_t i = 0; i < x.size(); ++i) {
        x_zero = x_zero && Ops::is_zero(x[i]);
        y_zero = y_zero && Ops::is_zero(y[i]);
    }
    if (x_zero || y_zero)
        throw CalcError("bad-point", "the zero tuple is not a projective point");
    std::vector<int> support;
    for (size_t i = 0; i < x.size(); ++i) {
        bool xz = Ops::is_zero(x[i]), yz = Ops::is_zero(y[i]);
        if (xz != yz) return false;
        if (!xz) support.push_back((int)i);
    }
    std::vector<long long> w;
    for (int i : support) w.push_back(space.weights[i]);
    std::vector<long long> combo;
    long long g = gcd_combination(w, combo);
    // mu^g is forced to R = prod ratio_i^{c_i}; mu exists iff R^(w_i/g)
    // reproduces every ratio.
    F R = Ops::one();
    std::vector<F> ratios;
    for (size_t idx = 0; idx < support.size(); ++idx) {
        F ratio = Ops::div(y[support[idx]], x[support[idx]]);
        ratios.push_back(ratio);
        R = Ops::mul(R, Ops::pow(ratio, combo[idx]));
    }
    for (size_t idx = 0; idx < support.size(); ++idx) {
        if (!(Ops::pow(R, w[idx] / g) == ratios[idx])) return false;
    }
    return true;
}

}  // namespace

bool projectively_equal(const WeightedSpace& space, const std::vector<Rational>& x,
                        const std::vector<Rational>& y) {
    return projectively_equal_impl(space, x, y);
}

bool projectively_equal(const WeightedSpace& space, const std::vector<Cyc>& x,
                        const std::vector<Cyc>& y) {
    return projectively_equal_impl(space, x, y);
}

std::vector<Rational> apply_involution(const InvolutionSpec& inv,
                                       const std::vector<Rational>& x) {
    std::vector<Rational> out = x;
    for (size_t i = 0; i < out.size(); ++i)
        if (inv.signs.at(i) < 0) out[i] = -out[i];
    return out;
}

std::vector<Cyc> apply_involution(const InvolutionSpec& inv, const std::vector<Cyc>& x) {
    std::vector<Cyc> out = x;
    for (size_t i = 0; i < out.size(); ++i)
        if (inv.signs.at(i) < 0) out[i] = -out[i];
    return out;
}

// --------------------------------------------------------------------------
// Hypersurface sections of the fixed strata.

namespace {

struct LineTerm {
    long long a = 0, b = 0;  // exponents of the two supported coordinates
    Rational coeff;
};

std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& coeffs) {
    // coeffs low-to-high, leading nonzero; returns all complex roots.
    size_t deg = coeffs.size() - 1;
    std::vector<std::complex<double>> roots(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = 1.0;
    for (size_t i = 0; i < deg; ++i) {
        p *= seed;
        roots[i] = p;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };
    std::complex<double> lead = coeffs.back();
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = lead;
            for (size_t j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return roots;
}

// Sort key making point lists deterministic.
bool approx_less(const std::vector<std::complex<double>>& a,
                 const std::vector<std::complex<double>>& b) {
    auto snap = [](double v) { return std::llround(v * 1e9); };
    for (size_t i = 0; i < a.size(); ++i) {
        auto ka = std::make_pair(snap(a[i].real()), snap(a[i].imag()));
        auto kb = std::make_pair(snap(b[i].real()), snap(b[i].imag()));
        if (ka != kb) return ka < kb;
    }
    return false;
}

// Solves the restriction of `poly` on the one-dimensional stratum with the
// two supported coordinates (i, j); returns isolated points in ambient
// coordinates.  Tries the exact cyclotomic route first, falls back to
// certified numerics.
std::vector<IsolatedPoint> solve_on_line(const WeightedSpace& space, const QhPolynomial& poly,
                                         int ci, int cj) {
    const size_t n = space.weights.size();
    std::vector<LineTerm> terms;
    for (const auto& m : poly.terms()) {
        LineTerm t;
        t.a = m.exponents[ci];
        t.b = m.exponents[cj];
        t.coeff = m.coeff;
        terms.push_back(t);
    }
    if (terms.empty()) throw CalcError("internal", "empty restriction on line stratum");

    // Pivot = smaller weight, so the chart stabilizer is as small as possible.
    if (space.weights[cj] < space.weights[ci]) {
        std::swap(ci, cj);
        for (auto& t : terms) std::swap(t.a, t.b);
    }
    const long long wa = space.weights[ci], wb = space.weights[cj];

    long long amin = INT64_MAX, bmin = INT64_MAX;
    for (const auto& t : terms) {
        amin = std::min(amin, t.a);
        bmin = std::min(bmin, t.b);
    }

    std::vector<IsolatedPoint> points;
    auto make_exact_point = [&](const Cyc& u, const Cyc& v, bool simple) {
        IsolatedPoint p;
        p.exact.assign(n, Cyc());
        p.exact[ci] = u;
        p.exact[cj] = v;
        p.approx.assign(n, {0.0, 0.0});
        p.approx[ci] = u.approx();
        p.approx[cj] = v.approx();
        p.simple = simple;
        std::vector<Cyc> full(n, Cyc());
        full[ci] = u;
        full[cj] = v;
        if (!poly.eval_cyc(full).is_zero())
            throw CalcError("internal", "exact solution fails the restricted equation");
        return p;
    };

    // Coordinate points: order of vanishing is the minimal exponent (alpha
    // determines beta under quasi-homogeneity, so no cancellation).
    if (bmin >= 1) points.push_back(make_exact_point(Cyc(Rational(1)), Cyc(), bmin == 1));
    if (amin >= 1) points.push_back(make_exact_point(Cyc(), Cyc(Rational(1)), amin == 1));

    // Both-nonzero points: factor u^amin v^bmin, pass to the chart u = 1 and
    // quotient the root set by the chart stabilizer mu_wa acting by its
    // wb-th powers.
    std::vector<std::pair<long long, Rational>> q;  // v-exponent -> coefficient
    for (const auto& t : terms) q.emplace_back(t.b - bmin, t.coeff);
    std::sort(q.begin(), q.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    long long stab = wa / std::gcd(wa, wb);  // order of the multiplier group

    if (q.size() >= 2) {
        bool exact_done = false;
        if (q.size() == 2 && 24 % stab == 0) {
            // Binomial: c0 + c1 v^B = 0.
            long long B = q[1].first;
            Rational ratio = -(q[0].second / q[1].second);
            auto roots = nth_roots_in_field(Cyc(ratio), B);
            if (roots) {
                // Deduplicate by the stabilizer orbit: the multipliers form
                // exactly mu_stab.
                std::vector<Cyc> multipliers;
                for (long long t = 0; t < stab; ++t)
                    multipliers.push_back(Cyc::zeta_pow((24 / stab) * t));
                std::vector<Cyc> kept;
                for (const auto& r : *roots) {
                    bool dup = false;
                    for (const auto& k : kept)
                        for (const auto& mlt : multipliers)
                            if (mlt * k == r) { dup = true; break; }
                    if (!dup) kept.push_back(r);
                }
                // Simplicity: derivative of c0 + c1 v^B never vanishes at a
                // nonzero root, so every chart point is simple.
                for (const auto& v : kept)
                    points.push_back(make_exact_point(Cyc(Rational(1)), v, true));
                exact_done = true;
            }
        }
        if (!exact_done) {
            // Numeric chart roots with interval certification.
            long long deg = q.back().first;
            std::vector<std::complex<double>> coeffs((size_t)deg + 1, 0.0);
            for (const auto& [e, c] : q) coeffs[(size_t)e] = c.to_double();
            std::vector<std::complex<double>> roots = durand_kerner(coeffs);
            // Orbit deduplication at tolerance 1e-6.
            std::vector<std::complex<double>> kept;
            const double tau = 2.0 * std::numbers::pi;
            for (const auto& r : roots) {
                bool dup = false;
                for (const auto& k : kept) {
                    for (long long t = 0; t < stab && !dup; ++t) {
                        std::complex<double> mlt =
                            std::polar(1.0, tau * double(t * wb % wa) / double(wa));
                        if (std::abs(mlt * k - r) < 1e-6) dup = true;
                    }
                    if (dup) break;
                }
                if (!dup) kept.push_back(r);
            }
            for (const auto& v : kept) {
                IsolatedPoint p;
                p.approx.assign(n, {0.0, 0.0});
                p.approx[ci] = {1.0, 0.0};
                p.approx[cj] = v;
                CInterval res = poly.eval_interval(p.approx);
                double bound = std::sqrt(res.abs2_upper());
                if (!(bound < 1e-9))
                    throw CalcError("residual-certification",
                                    "numeric root failed the 1e-9 residual certificate");
                p.residual = bound;
                // Simple iff q'(v) is certifiably nonzero.
                std::vector<std::complex<double>> dq;
                for (const auto& [e, c] : q)
                    if (e > 0) {
                        if ((size_t)e > dq.size()) dq.resize((size_t)e, 0.0);
                        dq[(size_t)e - 1] = double(e) * c.to_double();
                    }
                CInterval dv = CInterval::exact({0.0, 0.0});
                CInterval vp = CInterval::exact({1.0, 0.0});
                for (size_t e = 0; e < dq.size(); ++e) {
                    dv = dv + CInterval::exact(dq[e]) * vp;
                    vp = vp * CInterval::exact(v);
                }
                p.simple = dv.abs2_lower() > 1e-12;
                points.push_back(std::move(p));
            }
        }
    }

    std::sort(points.begin(), points.end(), [](const IsolatedPoint& a, const IsolatedPoint& b) {
        return approx_less(a.approx, b.approx);
    });
    return points;
}

}  // namespace

HypersurfaceFixedLocus hypersurface_fixed_locus(const WeightedSpace& space,
                                                const InvolutionSpec& inv, long long degree,
                                                const QhPolynomial& poly) {
    space.validate();
    inv.validate(space);
    if (poly.is_zero())
        throw CalcError("not-a-hypersurface", "the zero polynomial does not cut a hypersurface");
    auto deg = poly.weighted_degree(space.weights);
    if (!deg || *deg != degree)
        throw CalcError("not-quasi-homogeneous",
                        "polynomial is not quasi-homogeneous of degree " + std::to_string(degree));
    size_t offending = 0;
    if (poly.sign_character(inv.signs, &offending) == 0) {
        std::vector<Monomial> one{poly.terms()[offending]};
        QhPolynomial bad = QhPolynomial::from_terms(poly.var_count(), one);
        throw CalcError("not-semi-invariant", "monomial " + bad.str(space.coordinate_names) +
                                                  " breaks the sign symmetry");
    }

    FixedLocus locus = fixed_locus(space, inv);
    HypersurfaceFixedLocus out;
    out.fixes_everything = locus.fixes_everything;
    for (const auto& stratum : locus.strata) {
        DecoratedStratum ds;
        ds.stratum = stratum;
        QhPolynomial restricted = poly.restrict_to_support(stratum.support);
        ds.restricted_equation = restricted.str(space.coordinate_names);
        int ambient_dim = (int)stratum.support.size() - 1;
        if (restricted.is_zero()) {
            ds.contained_in_hypersurface = true;
            ds.stratum.dimension = ambient_dim;
        } else {
            ds.stratum.dimension = ambient_dim - 1;
        }
        ds.stratum.kind = kind_for_locus_dim(ds.stratum.dimension);
        if (ds.stratum.dimension < 0) continue;  // stratum misses the hypersurface

        if (ds.stratum.dimension == 0) {
            if (ds.contained_in_hypersurface) {
                // A fixed coordinate point lying on the hypersurface.
                IsolatedPoint p;
                p.exact.assign(space.weights.size(), Cyc());
                p.exact[stratum.support[0]] = Cyc(Rational(1));
                p.approx.assign(space.weights.size(), {0.0, 0.0});
                p.approx[stratum.support[0]] = {1.0, 0.0};
                ds.points.push_back(std::move(p));
            } else {
                ds.points = solve_on_line(space, restricted, stratum.support[0],
                                          stratum.support[1]);
            }
            out.isolated_point_count += (long long)ds.points.size();
        } else if (ds.stratum.dimension == 2) {
            ++out.surface_count;
        }
        out.strata.push_back(std::move(ds));
    }
    return out;
}

// --------------------------------------------------------------------------
// The double-cover projection check.

bool QuotientProjectionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const QuotientCheck& c) { return c.pass; });
}

namespace {

struct CoverPattern {
    int t_index = -1;
    Rational t_coeff;      // coefficient of t^2
    QhPolynomial f;        // t^2 = f(remaining coordinates)
};

CoverPattern extract_cover_pattern(const WeightedSpace& space, const InvolutionSpec& inv,
                                   long long degree, const QhPolynomial& poly) {
    space.validate();
    inv.validate(space);
    CoverPattern pat;
    for (size_t i = 0; i < inv.signs.size(); ++i) {
        if (inv.signs[i] < 0) {
            if (pat.t_index >= 0)
                throw CalcError("unsupported-pattern",
                                "projection check needs exactly one negated coordinate");
            pat.t_index = (int)i;
        }
    }
    if (pat.t_index < 0)
        throw CalcError("unsupported-pattern", "involution negates no coordinate");
    auto deg = poly.weighted_degree(space.weights);
    if (poly.is_zero() || !deg || *deg != degree)
        throw CalcError("not-quasi-homogeneous", "polynomial must be quasi-homogeneous");
    if (2 * space.weights[pat.t_index] != degree)
        throw CalcError("unsupported-pattern", "negated coordinate must have weight degree/2");
    std::vector<Monomial> rest;
    for (const auto& m : poly.terms()) {
        if (m.exponents[pat.t_index] == 0) {
            rest.push_back(m);
            continue;
        }
        bool pure = m.exponents[pat.t_index] == 2;
        for (size_t i = 0; pure && i < m.exponents.size(); ++i)
            if (i != (size_t)pat.t_index && m.exponents[i] != 0) pure = false;
        if (!pure)
            throw CalcError("unsupported-pattern",
                            "negated coordinate must enter only through c*t^2");
        if (!pat.t_coeff.is_zero())
            throw CalcError("unsupported-pattern", "multiple t^2 monomials");
        pat.t_coeff = m.coeff;
    }
    if (pat.t_coeff.is_zero())
        throw CalcError("unsupported-pattern", "equation has no t^2 monomial");
    // t^2 = f := -(rest)/c.
    for (auto& m : rest) m.coeff = m.coeff / (-pat.t_coeff);
    pat.f = QhPolynomial::from_terms(poly.var_count(), std::move(rest));
    return pat;
}

}  // namespace

long long projection_preimage_count(const WeightedSpace& space, const InvolutionSpec& inv,
                                    long long degree, const QhPolynomial& poly,
                                    const std::vector<Rational>& target) {
    CoverPattern pat = extract_cover_pattern(space, inv, degree, poly);
    if (target.size() != space.weights.size() - 1)
        throw CalcError("bad-point", "target point arity must match the projection image");
    // Evaluate f at the target (t slot unused by f).
    std::vector<Rational> ambient;
    size_t k = 0;
    for (size_t i = 0; i < space.weights.size(); ++i)
        ambient.push_back((int)i == pat.t_index ? Rational(0) : target[k++]);
    Rational f_val = pat.f.eval_rational(ambient);
    if (f_val.is_zero()) return 1;  // ramified: t = 0 twice
    long long g = 0;
    bool any = false;
    for (size_t i = 0, k2 = 0; i < space.weights.size(); ++i) {
        if ((int)i == pat.t_index) continue;
        if (!target[k2++].is_zero()) {
            g = std::gcd(g, space.weights[i]);
            any = true;
        }
    }
    if (!any) throw CalcError("bad-point", "the zero tuple is not a projective point");
    // t ~ -t over this target iff some mu in mu_g has mu^{w_t} = -1.
    long long wt = space.weights[pat.t_index];
    bool identified = (g % 2 == 0) && ((g / 2) % std::gcd(wt, g) == 0);
    return identified ? 1 : 2;
}

QuotientProjectionReport verify_quotient_projection(const WeightedSpace& space,
                                                    const InvolutionSpec& inv, long long degree,
                                                    const QhPolynomial& poly) {
    CoverPattern pat = extract_cover_pattern(space, inv, degree, poly);
    QuotientProjectionReport rep;
    rep.dropped_coordinate = pat.t_index;
    for (size_t i = 0; i < space.weights.size(); ++i) {
        if ((int)i == pat.t_index) continue;
        rep.target.weights.push_back(space.weights[i]);
        rep.target.coordinate_names.push_back(space.coordinate_names[i]);
    }
    rep.target_singularities = coordinate_singularities(rep.target);

    // (a) The projection forgets exactly the negated coordinate, so it is
    // invariant: check structurally and on sample points.
    {
        QuotientCheck c{"projection-invariant"};
        bool ok = true;
        std::vector<Rational> sample;
        for (size_t i = 0; i < space.weights.size(); ++i) sample.push_back(Rational((long long)i + 1));
        std::vector<Rational> image = apply_involution(inv, sample);
        for (size_t i = 0; ok && i < sample.size(); ++i)
            if ((int)i != pat.t_index && image[i] != sample[i]) ok = false;
        c.pass = ok;
        c.detail = "projection drops coordinate '" +
                   space.coordinate_names[pat.t_index] + "', the only negated one";
        rep.checks.push_back(std::move(c));
    }

    // (b) Generic fibers have two elements t = ±sqrt(f).
    {
        QuotientCheck c{"generic-fiber-two"};
        bool ok = true;
        std::string detail;
        size_t target_n = rep.target.weights.size();
        std::vector<std::vector<Rational>> targets;
        std::vector<Rational> e0(target_n, Rational(0));
        e0[0] = Rational(1);
        targets.push_back(e0);
        unsigned long long state = 0x5bd1e995;
        auto next_small = [&]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return (long long)((state >> 33) % 7) - 3;
        };
        while (targets.size() < 9) {
            std::vector<Rational> t;
            for (size_t i = 0; i < target_n; ++i) t.push_back(Rational(next_small()));
            bool nonzero = std::any_of(t.begin(), t.end(),
                                       [](const Rational& r) { return !r.is_zero(); });
            if (!nonzero) continue;
            targets.push_back(std::move(t));
        }
        for (const auto& t : targets) {
            std::vector<Rational> ambient;
            size_t k = 0;
            for (size_t i = 0; i < space.weights.size(); ++i)
                ambient.push_back((int)i == pat.t_index ? Rational(0) : t[k++]);
            Rational f_val = pat.f.eval_rational(ambient);
            if (f_val.is_zero()) continue;  // on the branch, not generic
            long long g = 0;
            for (size_t i = 0, k2 = 0; i < space.weights.size(); ++i) {
                if ((int)i == pat.t_index) continue;
                if (!t[k2++].is_zero()) g = std::gcd(g, space.weights[i]);
            }
            if (g != 1) continue;  // keep to the generic chart
            long long got = projection_preimage_count(space, inv, degree, poly, t);
            if (got != 2) ok = false;
        }
        // The first sample doubles as the documented case: f(e0) and its roots.
        {
            std::vector<Rational> ambient;
            size_t k = 0;
            for (size_t i = 0; i < space.weights.size(); ++i)
                ambient.push_back((int)i == pat.t_index ? Rational(0) : e0[k++]);
            Rational f_val = pat.f.eval_rational(ambient);
            auto root = exact_nth_root(f_val, 2);
            detail = "f(e_0) = " + f_val.str() + ", preimages t = " +
                     (root ? ("±" + root->str()) : ("±sqrt(" + f_val.str() + ")"));
        }
        c.pass = ok;
        c.detail = detail;
        rep.checks.push_back(std::move(c));
    }

    // (c) Branch image: {f = 0} plus the coordinate points where the
    // weighted rescaling identifies t with -t.
    {
        QuotientCheck c{"branch-locus"};
        bool ok = true;
        std::vector<std::string> identified_points;
        size_t target_n = rep.target.weights.size();
        for (size_t i = 0; i < target_n; ++i) {
            std::vector<Rational> e(target_n, Rational(0));
            e[i] = Rational(1);
            long long count = projection_preimage_count(space, inv, degree, poly, e);
            std::vector<Rational> ambient;
            size_t k = 0;
            for (size_t j = 0; j < space.weights.size(); ++j)
                ambient.push_back((int)j == pat.t_index ? Rational(0) : e[k++]);
            Rational f_val = pat.f.eval_rational(ambient);
            long long g = rep.target.weights[i];
            long long wt = space.weights[pat.t_index];
            bool expect_identified = (g % 2 == 0) && ((g / 2) % std::gcd(wt, g) == 0);
            long long expected = f_val.is_zero() ? 1 : (expect_identified ? 1 : 2);
            if (count != expected) ok = false;
            if (!f_val.is_zero() && expect_identified)
                identified_points.push_back(rep.target.coordinate_names[i]);
        }
        // One rational sample on {f = 0}, if a small search finds one.
        bool found_branch_sample = false;
        {
            size_t n_t = target_n;
            std::vector<long long> v(n_t, 0);
            std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
                if (idx == n_t) {
                    bool nonzero = std::any_of(v.begin(), v.end(), [](long long a) { return a != 0; });
                    if (!nonzero) return false;
                    std::vector<Rational> t;
                    for (long long a : v) t.emplace_back(a);
                    std::vector<Rational> ambient;
                    size_t k = 0;
                    for (size_t i = 0; i < space.weights.size(); ++i)
                        ambient.push_back((int)i == pat.t_index ? Rational(0) : t[k++]);
                    if (!pat.f.eval_rational(ambient).is_zero()) return false;
                    found_branch_sample = true;
                    if (projection_preimage_count(space, inv, degree, poly, t) != 1) ok = false;
                    return true;
                }
                for (long long a = -2; a <= 2; ++a) {
                    v[idx] = a;
                    if (rec(idx + 1)) return true;
                }
                return false;
            };
            rec(0);
        }
        c.pass = ok;
        c.detail = "branch image = {f = 0}";
        for (const auto& p : identified_points) c.detail += " plus coordinate point e_" + p;
        if (!found_branch_sample) c.detail += " (no small rational sample on f = 0)";
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace cycalc
