#include "cycalc/invariants.hpp"

#include "cycalc/riemann_roch.hpp"

namespace cycalc {

void QuotientData::validate() const {
    if (!(d > Rational(0)))
        throw CalcError("bad-quotient", "class-group degree d must be positive");
    if (s <= 0) throw CalcError("bad-quotient", "involution index s must be positive");
    if (N < 0) throw CalcError("bad-quotient", "half-point count N must be non-negative");
    if (N == 0 && !d.is_integer())
        throw CalcError("bad-quotient", "smooth quotient (N = 0) needs integral degree d");
}

Rational QuotientData::c2_dot_hprime_value() const {
    if (c2_dot_Hprime) return *c2_dot_Hprime;
    return Rational(2, s) * minus_K_dot_c2(N);
}

Rational h3_of_cover(const Rational& d) {
    if (!(d > Rational(0)))
        throw CalcError("bad-quotient", "H^3 = 2|H'^3| needs positive degree, got " + d.str());
    return Rational(2) * d;
}

Rational hc2_of_cover(long long s, long long N, const Rational& h3) {
    return Rational(4, s) * minus_K_dot_c2(N) + Rational(s * s, 4) * h3;
}

Rational surface_euler(const SpaceModel& space, const DivisorClass& D) {
    Rational c2D = c2_dot(space, D);
    Rational c1DD = triple_product(space, space.c1, D, D);
    Rational DDD = triple_product(space, D, D, D);
    return c2D - c1DD + DDD;
}

Rational euler_of_cover(const Rational& euler_Y, const Rational& euler_S, long long N) {
    if (N < 0) throw CalcError("bad-quotient", "negative half-point count");
    return Rational(2) * euler_Y - euler_S - Rational(N);
}

long long s_from_fano_index(const Rational& r_half, bool hprime_not_cartier) {
    Rational doubled = Rational(2) * r_half;
    bool half_integral = !r_half.is_integer();
    if (!(r_half > Rational(0)) || !doubled.is_integer() || r_half > Rational(5))
        throw CalcError("unsupported-index", "unsupported Fano index " + r_half.str());
    long long r_Y = doubled.as_integer();
    // Odd r_Y cannot live on a Cartier H', so the primitive Cartier class is
    // 2H' and s doubles; for integral indices the doubling is an input fact.
    if (half_integral || hprime_not_cartier) return 2 * r_Y;
    return r_Y;
}

SpaceModel quotient_space_model(const QuotientData& q, const std::string& id,
                                const std::string& hprime) {
    q.validate();
    SpaceModel y;
    y.id = id;
    y.generators = {hprime};
    y.set_triple(hprime, hprime, hprime, q.d);
    y.c1 = DivisorClass(id);
    y.c1.add(hprime, Rational(q.s, 2));
    y.c2_pairing[hprime] = q.c2_dot_hprime_value();
    y.half_points = q.N;
    y.euler = q.euler_Y;
    return y;
}

CoverInvariants cover_invariants(const QuotientData& q, std::optional<Rational> euler_S) {
    q.validate();
    CoverInvariants out;
    out.h3 = h3_of_cover(q.d);
    out.hc2 = hc2_of_cover(q.s, q.N, out.h3);
    if (q.euler_Y) {
        SpaceModel y = quotient_space_model(q);
        DivisorClass D = y.cls({{"H'", Rational(q.s)}});
        out.euler_S = euler_S ? *euler_S : surface_euler(y, D);
        out.euler = euler_of_cover(*q.euler_Y, *out.euler_S, q.N);
    }
    return out;
}

}  // namespace cycalc
