#include "cycalc/fermat.hpp"

#include <algorithm>
#include <numbers>

#include "cycalc/interval.hpp"

namespace cycalc {

void FermatSystem::validate() const {
    if (ambient_dim < 1) throw CalcError("bad-system", "ambient space must be at least P^1");
    if (signs.size() != coord_count())
        throw CalcError("bad-system", "sign list must have one entry per coordinate");
    for (int s : signs)
        if (s != 1 && s != -1) throw CalcError("bad-system", "signs must be +1 or -1");
    for (const auto& eq : equations) {
        if (eq.degree < 1) throw CalcError("bad-system", "equation degree must be positive");
        if (eq.coeffs.size() != coord_count())
            throw CalcError("bad-system", "coefficient list must have one entry per coordinate");
        if (eq.degree % 2 != 0) {
            // Odd-degree Fermat forms are semi-invariant only when every
            // active coordinate carries the same sign.
            int found = 0;
            for (size_t i = 0; i < eq.coeffs.size(); ++i) {
                if (eq.coeffs[i].is_zero()) continue;
                if (found == 0)
                    found = signs[i];
                else if (found != signs[i])
                    throw CalcError("not-semi-invariant",
                                    "odd-degree equation mixes sign blocks");
            }
        }
    }
}

namespace {

struct LocalEquation {
    long long degree = 0;
    std::vector<Rational> coeffs;  // parallel to the active coordinate list
    size_t active() const {
        size_t n = 0;
        for (const auto& c : coeffs)
            if (!c.is_zero()) ++n;
        return n;
    }
};

struct LocalPoint {
    std::vector<Cyc> exact;  // parallel to active coords; empty if numeric
    std::vector<std::complex<double>> approx;
};

struct StratumSolution {
    std::vector<LocalPoint> points;
    std::vector<int> active;  // ambient indices of the surviving coordinates
    long long bezout = -1;
    bool exact_mode = true;
};

std::string support_str(const std::vector<int>& support) {
    std::string s = "{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) s += ",";
        s += "x" + std::to_string(support[i]);
    }
    return s + "}";
}

std::vector<std::complex<double>> complex_nth_roots(std::complex<double> w, long long n) {
    std::vector<std::complex<double>> out;
    double r = std::pow(std::abs(w), 1.0 / double(n));
    double th = std::arg(w);
    for (long long k = 0; k < n; ++k)
        out.push_back(std::polar(r, (th + 2.0 * std::numbers::pi * double(k)) / double(n)));
    return out;
}

struct QuadraticRoots {
    std::vector<Cyc> exact;
    std::vector<std::complex<double>> approx;
    bool exact_mode = true;
    bool whole_line = false;  // identically zero: positive-dimensional
};

// p u^2 + q u + r over the rationals; exact roots when the discriminant
// splits as t^2 times a squarefree integer whose square root lives in the
// field.
QuadraticRoots solve_quadratic(const Rational& p, const Rational& q, const Rational& r) {
    QuadraticRoots out;
    if (p.is_zero() && q.is_zero()) {
        if (r.is_zero()) out.whole_line = true;
        return out;
    }
    if (p.is_zero()) {
        Rational u = -(r / q);
        out.exact.push_back(Cyc(u));
        out.approx.push_back({u.to_double(), 0.0});
        return out;
    }
    Rational disc = q * q - Rational(4) * p * r;
    if (disc.is_zero()) {  // tangential: one double root
        Rational u = -(q / (Rational(2) * p));
        out.exact.push_back(Cyc(u));
        out.approx.push_back({u.to_double(), 0.0});
        return out;
    }
    auto sq = sqrt_rational_in_field(disc);
    if (sq) {
        Rational inv2p = Rational(1) / (Rational(2) * p);
        Cyc root1 = inv2p * (Cyc(-q) + *sq);
        Cyc root2 = inv2p * (Cyc(-q) - *sq);
        out.exact = {root1, root2};
        out.approx = {root1.approx(), root2.approx()};
    } else {
        out.exact_mode = false;
        std::complex<double> sd = std::sqrt(std::complex<double>(disc.to_double(), 0.0));
        std::complex<double> i2p = 1.0 / std::complex<double>(2.0 * p.to_double(), 0.0);
        out.approx = {(-q.to_double() + sd) * i2p, (-q.to_double() - sd) * i2p};
    }
    return out;
}

class StratumSolver {
public:
    StratumSolver(std::vector<int> active, std::vector<LocalEquation> eqs)
        : active_(std::move(active)), eqs_(std::move(eqs)) {}

    StratumSolution solve() {
        reduce();
        StratumSolution out;
        out.active = active_;
        if (active_.empty()) return out;
        size_t m = active_.size() - 1;
        size_t r = eqs_.size();
        if (r < m)
            throw CalcError("not-zero-dimensional",
                            "stratum " + support_str(active_) +
                                " meets the system in positive dimension");
        if (m == 0) {
            LocalPoint p;
            p.exact = {Cyc(Rational(1))};
            p.approx = {{1.0, 0.0}};
            out.points.push_back(std::move(p));
            out.bezout = 1;
            return out;
        }
        if (m == 1) {
            solve_binary(out);
            return out;
        }
        if (m == 2 && r == 2) {
            std::sort(eqs_.begin(), eqs_.end(),
                      [](const LocalEquation& a, const LocalEquation& b) {
                          return a.degree < b.degree;
                      });
            if (eqs_[1].degree == 2 * eqs_[0].degree) {
                solve_conic_pair(out);
                return out;
            }
        }
        throw CalcError("unsupported-pattern",
                        "no exact/certified solver for this Fermat pattern on stratum " +
                            support_str(active_));
    }

private:
    // Removes trivial equations; a single-monomial equation forces its
    // coordinate to vanish.
    void reduce() {
        bool changed = true;
        while (changed && !active_.empty()) {
            changed = false;
            for (auto it = eqs_.begin(); it != eqs_.end();) {
                if (it->active() == 0)
                    it = eqs_.erase(it);
                else
                    ++it;
            }
            for (const auto& eq : eqs_) {
                if (eq.active() != 1) continue;
                size_t idx = 0;
                while (eq.coeffs[idx].is_zero()) ++idx;
                active_.erase(active_.begin() + (long)idx);
                for (auto& e : eqs_) e.coeffs.erase(e.coeffs.begin() + (long)idx);
                changed = true;
                break;
            }
        }
    }

    static Cyc eval_eq_exact(const LocalEquation& eq, const std::vector<Cyc>& pt) {
        Cyc acc;
        for (size_t i = 0; i < eq.coeffs.size(); ++i) {
            if (eq.coeffs[i].is_zero()) continue;
            acc = acc + eq.coeffs[i] * pt[i].pow(eq.degree);
        }
        return acc;
    }

    static std::complex<double> eval_eq_numeric(const LocalEquation& eq,
                                                const std::vector<std::complex<double>>& pt) {
        std::complex<double> acc = 0.0;
        for (size_t i = 0; i < eq.coeffs.size(); ++i) {
            if (eq.coeffs[i].is_zero()) continue;
            std::complex<double> pw = 1.0;
            for (long long e = 0; e < eq.degree; ++e) pw *= pt[i];
            acc += eq.coeffs[i].to_double() * pw;
        }
        return acc;
    }

    bool passes_extra_filters_exact(const std::vector<Cyc>& pt) const {
        for (size_t e = 1; e < eqs_.size(); ++e)
            if (!eval_eq_exact(eqs_[e], pt).is_zero()) return false;
        return true;
    }
    bool passes_extra_filters_numeric(const std::vector<std::complex<double>>& pt) const {
        for (size_t e = 1; e < eqs_.size(); ++e)
            if (std::abs(eval_eq_numeric(eqs_[e], pt)) > 1e-9) return false;
        return true;
    }

    // One binary equation on the chart y = 1 (both coefficients nonzero after
    // reduction); any further equations act as filters.
    void solve_binary(StratumSolution& out) {
        const LocalEquation& eq = eqs_[0];
        long long d = eq.degree;
        const Rational &c0 = eq.coeffs[0], &c1 = eq.coeffs[1];
        out.bezout = eqs_.size() == 1 ? d : -1;
        auto exact_roots = nth_roots_in_field(Cyc(-(c1 / c0)), d);  // x^d = -c1/c0
        if (exact_roots) {
            for (const auto& x : *exact_roots) {
                std::vector<Cyc> pt{x, Cyc(Rational(1))};
                if (!passes_extra_filters_exact(pt)) continue;
                LocalPoint p;
                p.approx = {x.approx(), {1.0, 0.0}};
                p.exact = std::move(pt);
                out.points.push_back(std::move(p));
            }
        } else {
            out.exact_mode = false;
            std::complex<double> rhs(-(c1 / c0).to_double(), 0.0);
            for (const auto& x : complex_nth_roots(rhs, d)) {
                std::vector<std::complex<double>> pt{x, {1.0, 0.0}};
                if (!passes_extra_filters_numeric(pt)) continue;
                LocalPoint p;
                p.approx = std::move(pt);
                out.points.push_back(std::move(p));
            }
        }
    }

    // Degrees (d, 2d) on three coordinates: u = x^d, v = y^d turns the chart
    // z = 1 into a line plus a diagonal conic; the chart z = 0 recurses.
    void solve_conic_pair(StratumSolution& out) {
        long long d = eqs_[0].degree;
        const auto& a = eqs_[0].coeffs;
        const auto& b = eqs_[1].coeffs;
        out.bezout = eqs_[0].degree * eqs_[1].degree;

        {  // z = 0 piece
            std::vector<LocalEquation> sub = eqs_;
            for (auto& eq : sub) eq.coeffs.pop_back();
            StratumSolver sub_solver({active_[0], active_[1]}, std::move(sub));
            StratumSolution sub_sol = sub_solver.solve();
            if (!sub_sol.exact_mode) out.exact_mode = false;
            for (auto& p : sub_sol.points) {
                LocalPoint q;
                if (!p.exact.empty()) q.exact = {p.exact[0], p.exact[1], Cyc()};
                q.approx = {p.approx[0], p.approx[1], {0.0, 0.0}};
                out.points.push_back(std::move(q));
            }
        }

        struct UV {
            Cyc u, v;
            std::complex<double> un, vn;
            bool exact = true;
        };
        std::vector<UV> pairs;
        if (!a[1].is_zero()) {
            Rational alpha = -(a[0] / a[1]);
            Rational beta = -(a[2] / a[1]);
            Rational p = b[0] + b[1] * alpha * alpha;
            Rational q = Rational(2) * b[1] * alpha * beta;
            Rational r = b[1] * beta * beta + b[2];
            QuadraticRoots roots = solve_quadratic(p, q, r);
            if (roots.whole_line)
                throw CalcError("not-zero-dimensional",
                                "the quadric vanishes on the whole chart line of stratum " +
                                    support_str(active_));
            if (roots.exact_mode) {
                for (const auto& u : roots.exact) {
                    UV uv;
                    uv.u = u;
                    uv.v = Rational(alpha) * u + Cyc(beta);
                    uv.un = uv.u.approx();
                    uv.vn = uv.v.approx();
                    pairs.push_back(std::move(uv));
                }
            } else {
                for (const auto& un : roots.approx) {
                    UV uv;
                    uv.exact = false;
                    uv.un = un;
                    uv.vn = alpha.to_double() * un + beta.to_double();
                    pairs.push_back(std::move(uv));
                }
            }
        } else {
            // a1 = 0 (a0, a2 nonzero after reduction): u is pinned.
            Rational u0 = -(a[2] / a[0]);
            if (b[1].is_zero()) {
                if ((b[0] * u0 * u0 + b[2]).is_zero())
                    throw CalcError("not-zero-dimensional",
                                    "v is unconstrained on stratum " + support_str(active_));
                // inconsistent: no chart points
            } else {
                Rational v2 = (-b[2] - b[0] * u0 * u0) / b[1];
                auto sq = sqrt_rational_in_field(v2);
                if (sq) {
                    for (const Cyc& v : {*sq, -*sq}) {
                        UV uv;
                        uv.u = Cyc(u0);
                        uv.v = v;
                        uv.un = uv.u.approx();
                        uv.vn = v.approx();
                        pairs.push_back(std::move(uv));
                    }
                } else {
                    std::complex<double> vn =
                        std::sqrt(std::complex<double>(v2.to_double(), 0.0));
                    for (const auto& v : {vn, -vn}) {
                        UV uv;
                        uv.exact = false;
                        uv.un = {u0.to_double(), 0.0};
                        uv.vn = v;
                        pairs.push_back(std::move(uv));
                    }
                }
            }
        }

        for (const auto& uv : pairs) {
            bool exact_here = uv.exact;
            std::optional<std::vector<Cyc>> xs, ys;
            if (exact_here) {
                xs = uv.u.is_zero() ? std::make_optional(std::vector<Cyc>{Cyc()})
                                    : nth_roots_in_field(uv.u, d);
                ys = uv.v.is_zero() ? std::make_optional(std::vector<Cyc>{Cyc()})
                                    : nth_roots_in_field(uv.v, d);
                if (!xs || !ys) exact_here = false;
            }
            if (exact_here) {
                for (const auto& x : *xs)
                    for (const auto& y : *ys) {
                        LocalPoint pnt;
                        pnt.exact = {x, y, Cyc(Rational(1))};
                        pnt.approx = {x.approx(), y.approx(), {1.0, 0.0}};
                        out.points.push_back(std::move(pnt));
                    }
            } else {
                out.exact_mode = false;
                auto xs_n = std::abs(uv.un) < 1e-30
                                ? std::vector<std::complex<double>>{{0.0, 0.0}}
                                : complex_nth_roots(uv.un, d);
                auto ys_n = std::abs(uv.vn) < 1e-30
                                ? std::vector<std::complex<double>>{{0.0, 0.0}}
                                : complex_nth_roots(uv.vn, d);
                for (const auto& x : xs_n)
                    for (const auto& y : ys_n) {
                        LocalPoint pnt;
                        pnt.approx = {x, y, {1.0, 0.0}};
                        out.points.push_back(std::move(pnt));
                    }
            }
        }
        if (!out.exact_mode)
            for (auto& p : out.points) p.exact.clear();  // never mix representations
    }

    std::vector<int> active_;
    std::vector<LocalEquation> eqs_;
};

bool proj_equal_exact(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    size_t first = a.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (!a[i].is_zero() && first == a.size()) first = i;
    }
    if (first == a.size()) return false;
    Cyc ratio = b[first] / a[first];
    for (size_t i = 0; i < a.size(); ++i)
        if (!(ratio * a[i] == b[i])) return false;
    return true;
}

void normalize_numeric(std::vector<std::complex<double>>& v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    std::complex<double> scale = v[best];
    for (auto& c : v) c /= scale;
}

bool proj_equal_numeric(std::vector<std::complex<double>> a,
                        std::vector<std::complex<double>> b) {
    normalize_numeric(a);
    normalize_numeric(b);
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-6) return false;
    return true;
}

// Residual and Jacobian certification at the reported representative.
void certify(const FermatSystem& sys, const std::vector<int>& active, FermatPoint& p) {
    std::vector<LocalEquation> eqs;
    for (const auto& eq : sys.equations) {
        LocalEquation le;
        le.degree = eq.degree;
        for (int i : active) le.coeffs.push_back(eq.coeffs[i]);
        if (le.active() > 0) eqs.push_back(std::move(le));
    }
    size_t m = active.size() - 1;

    if (p.is_exact()) {
        std::vector<Cyc> local;
        for (int i : active) local.push_back(p.exact[i]);
        for (const auto& eq : eqs) {
            Cyc val;
            for (size_t i = 0; i < local.size(); ++i) {
                if (eq.coeffs[i].is_zero()) continue;
                val = val + eq.coeffs[i] * local[i].pow(eq.degree);
            }
            if (!val.is_zero())
                throw CalcError("internal", "exact point fails its defining equation");
        }
        p.max_residual = 0.0;
        size_t pivot = local.size();
        for (size_t i = local.size(); i-- > 0;)
            if (!local[i].is_zero()) { pivot = i; break; }
        std::vector<size_t> vars;
        for (size_t i = 0; i < local.size(); ++i)
            if (i != pivot) vars.push_back(i);
        std::vector<std::vector<Cyc>> J(eqs.size(), std::vector<Cyc>(m));
        for (size_t e = 0; e < eqs.size(); ++e)
            for (size_t v = 0; v < m; ++v) {
                const Rational& c = eqs[e].coeffs[vars[v]];
                if (c.is_zero()) continue;
                J[e][v] = (Rational(eqs[e].degree) * c) * local[vars[v]].pow(eqs[e].degree - 1);
            }
        size_t rank = 0;
        for (size_t col = 0; col < m && rank < J.size(); ++col) {
            size_t pr = rank;
            while (pr < J.size() && J[pr][col].is_zero()) ++pr;
            if (pr == J.size()) continue;
            std::swap(J[pr], J[rank]);
            Cyc inv = J[rank][col].inverse();
            for (size_t cc = col; cc < m; ++cc) J[rank][cc] = inv * J[rank][cc];
            for (size_t rr = 0; rr < J.size(); ++rr) {
                if (rr == rank || J[rr][col].is_zero()) continue;
                Cyc f = J[rr][col];
                for (size_t cc = col; cc < m; ++cc) J[rr][cc] = J[rr][cc] - f * J[rank][cc];
            }
            ++rank;
        }
        p.jacobian_full_rank = (rank == m);
        return;
    }

    // Numeric mode: interval bounds at the max-norm-1 representative.
    std::vector<std::complex<double>> local;
    for (int i : active) local.push_back(p.approx[i]);
    double worst = 0.0;
    for (const auto& eq : eqs) {
        CInterval acc = CInterval::exact({0.0, 0.0});
        for (size_t i = 0; i < local.size(); ++i) {
            if (eq.coeffs[i].is_zero()) continue;
            acc = acc + CInterval::from_rational(eq.coeffs[i]) *
                            CInterval::exact(local[i]).pow(eq.degree);
        }
        worst = std::max(worst, std::sqrt(acc.abs2_upper()));
    }
    if (!(worst < 1e-9))
        throw CalcError("residual-certification",
                        "numeric point failed the 1e-9 residual certificate");
    p.max_residual = worst;

    size_t pivot = 0;
    for (size_t i = 1; i < local.size(); ++i)
        if (std::abs(local[i]) > std::abs(local[pivot])) pivot = i;
    std::vector<size_t> vars;
    for (size_t i = 0; i < local.size(); ++i)
        if (i != pivot) vars.push_back(i);
    if (eqs.size() < m) {
        p.jacobian_full_rank = false;
        return;
    }
    std::vector<std::vector<CInterval>> J(
        eqs.size(), std::vector<CInterval>(m, CInterval::exact({0.0, 0.0})));
    for (size_t e = 0; e < eqs.size(); ++e)
        for (size_t v = 0; v < m; ++v) {
            const Rational& c = eqs[e].coeffs[vars[v]];
            if (c.is_zero()) continue;
            J[e][v] = CInterval::from_rational(Rational(eqs[e].degree) * c) *
                      CInterval::exact(local[vars[v]]).pow(eqs[e].degree - 1);
        }
    bool full = false;
    if (m == 0) {
        full = true;
    } else if (m == 1) {
        for (size_t e = 0; e < eqs.size() && !full; ++e)
            if (J[e][0].abs2_lower() > 0.0) full = true;
    } else {  // m == 2: some certified-nonzero 2x2 minor
        for (size_t e1 = 0; e1 < eqs.size() && !full; ++e1)
            for (size_t e2 = e1 + 1; e2 < eqs.size() && !full; ++e2) {
                CInterval det = J[e1][0] * J[e2][1] - J[e1][1] * J[e2][0];
                if (det.abs2_lower() > 0.0) full = true;
            }
    }
    p.jacobian_full_rank = full;
}

}  // namespace

std::vector<FermatEquation> parse_fermat_equations(const std::string& text,
                                                   size_t coord_count) {
    std::vector<FermatEquation> eqs;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string chunk = text.substr(pos, end - pos);
        pos = end + 1;
        if (chunk.empty()) continue;
        size_t colon = chunk.find(':');
        if (colon == std::string::npos)
            throw CalcError("bad-system", "equation chunk '" + chunk + "' lacks 'degree:'");
        FermatEquation eq;
        eq.degree = std::stoll(chunk.substr(0, colon));
        std::string rest = chunk.substr(colon + 1);
        size_t p2 = 0;
        while (p2 <= rest.size()) {
            size_t comma = rest.find(',', p2);
            if (comma == std::string::npos) comma = rest.size();
            eq.coeffs.push_back(Rational::parse(rest.substr(p2, comma - p2)));
            p2 = comma + 1;
            if (comma == rest.size()) break;
        }
        if (eq.coeffs.size() != coord_count)
            throw CalcError("bad-system", "equation needs " + std::to_string(coord_count) +
                                              " coefficients");
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

FermatCount count_fixed_points(const FermatSystem& sys) {
    sys.validate();
    FermatCount out;

    std::vector<int> plus, minus;
    for (size_t i = 0; i < sys.signs.size(); ++i)
        (sys.signs[i] > 0 ? plus : minus).push_back((int)i);
    if (plus.empty() || minus.empty()) {
        // All +1 is the identity; all -1 is the scalar -1, trivial on P^n.
        out.identity_involution = true;
        return out;
    }

    for (const std::vector<int>& support : {plus, minus}) {
        std::vector<LocalEquation> eqs;
        for (const auto& eq : sys.equations) {
            LocalEquation le;
            le.degree = eq.degree;
            for (int i : support) le.coeffs.push_back(eq.coeffs[i]);
            if (le.active() > 0) eqs.push_back(std::move(le));
        }
        StratumSolver solver(support, std::move(eqs));
        StratumSolution sol = solver.solve();

        FermatStratum fs;
        fs.support = support;
        fs.bezout = sol.bezout;
        fs.exact_mode = sol.exact_mode;
        int stratum_index = (int)out.strata.size();

        std::vector<FermatPoint> pts;
        for (const auto& lp : sol.points) {
            FermatPoint p;
            p.stratum = stratum_index;
            p.approx.assign(sys.coord_count(), {0.0, 0.0});
            if (!lp.exact.empty()) p.exact.assign(sys.coord_count(), Cyc());
            for (size_t li = 0; li < sol.active.size(); ++li) {
                p.approx[sol.active[li]] = lp.approx[li];
                if (!lp.exact.empty()) p.exact[sol.active[li]] = lp.exact[li];
            }
            if (p.is_exact()) {
                // Canonical representative: first nonzero coordinate = 1.
                size_t first = 0;
                while (first < p.exact.size() && p.exact[first].is_zero()) ++first;
                Cyc inv = p.exact[first].inverse();
                for (size_t i = 0; i < p.exact.size(); ++i) {
                    p.exact[i] = inv * p.exact[i];
                    p.approx[i] = p.exact[i].approx();
                }
            } else {
                normalize_numeric(p.approx);
            }
            pts.push_back(std::move(p));
        }

        // Deduplicate: exact equality, or numeric tolerance 1e-6.
        std::vector<FermatPoint> unique;
        for (auto& p : pts) {
            bool dup = false;
            for (const auto& q : unique) {
                dup = (p.is_exact() && q.is_exact()) ? proj_equal_exact(p.exact, q.exact)
                                                     : proj_equal_numeric(p.approx, q.approx);
                if (dup) break;
            }
            if (!dup) unique.push_back(std::move(p));
        }
        fs.count = (long long)unique.size();

        for (auto& p : unique) {
            certify(sys, sol.active, p);
            if (!p.jacobian_full_rank)
                throw CalcError("not-transversal",
                                "fixed point without a full-rank Jacobian witness on stratum " +
                                    support_str(support));
        }

        if (fs.bezout >= 0 && fs.count != fs.bezout)
            throw CalcError("count-mismatch",
                            "enumerated " + std::to_string(fs.count) + " points, Bezout expects " +
                                std::to_string(fs.bezout) + " on stratum " + support_str(support));

        std::sort(unique.begin(), unique.end(), [](const FermatPoint& a, const FermatPoint& b) {
            auto snap = [](double v) { return std::llround(v * 1e9); };
            for (size_t i = 0; i < a.approx.size(); ++i) {
                auto ka = std::make_pair(snap(a.approx[i].real()), snap(a.approx[i].imag()));
                auto kb = std::make_pair(snap(b.approx[i].real()), snap(b.approx[i].imag()));
                if (ka != kb) return ka < kb;
            }
            return false;
        });
        out.count += fs.count;
        for (auto& p : unique) out.points.push_back(std::move(p));
        out.strata.push_back(std::move(fs));
    }
    return out;
}

std::vector<FermatPoint> list_fixed_points(const FermatSystem& sys) {
    return count_fixed_points(sys).points;
}

}  // namespace cycalc
