#include "cycalc/riemann_roch.hpp"

#include "cycalc/diagram.hpp"

namespace cycalc {

Rational c2_restriction(long long normal_degree) {
    return Rational(3 * normal_degree + 3);
}

bool c2_restriction_is_extrapolated(long long normal_degree) {
    return normal_degree != -1 && normal_degree != -2;
}

ChernRestriction chern_restriction(long long normal_degree) {
    return ChernRestriction{normal_degree, c2_restriction(normal_degree),
                            c2_restriction_is_extrapolated(normal_degree)};
}

Rational chi_of_resolution(const Rational& minus_K_dot_c2, long long k) {
    if (k < 0) throw CalcError("inconsistent-diagram", "negative fixed point count");
    return minus_K_dot_c2 / Rational(24) + Rational(k, 16);
}

IsolatedCount solve_isolated_count(const Rational& chi_Y) {
    Rational k16 = Rational(16) * chi_Y;
    if (!k16.is_integer() || k16 < Rational(0))
        throw CalcError("inconsistent-diagram",
                        "no non-negative integer k with k/16 = " + chi_Y.str());
    IsolatedCount out;
    out.k = k16.as_integer();
    out.fixed_point_free_contradiction = (out.k == 0);
    return out;
}

Rational minus_K_dot_c2(long long N) {
    if (N < 0) throw CalcError("inconsistent-diagram", "negative half-point count");
    return Rational(24) - Rational(3, 2) * Rational(N);
}

namespace {

// Zero-dimensional-fixed-locus diagram over a quotient with torsion
// canonical class: s = 0, branch surface empty, k exceptional planes.
DiagramContext zero_dimensional_diagram(long long k) {
    SpaceModel y;
    y.id = "Q";
    y.generators = {"A"};
    y.set_triple("A", "A", "A", Rational(1));
    y.c1 = DivisorClass(y.id);  // 2K_Y = 0
    y.c2_pairing["A"] = Rational(0);
    return DiagramContext::build_double_cover(std::move(y), k, /*s=*/0, "A", {"A"});
}

}  // namespace

DerivationTrace sixteen_point_derivation() {
    DerivationTrace t;
    auto line = [&](const std::string& s) { t.lines.push_back(s); };

    line("chi(O_Y) = 1 - 0 + 0 = 1          [h^i(O_Y) = 0 for i > 0]");
    line("K_Xt = f*(K_X) + 2 sum E_i = 2 sum E_i          [K_X = 0]");

    // Verify the canonical-class relation symbolically on resolutions with
    // several point counts; the identity is linear in the exceptional block.
    for (long long k : {1LL, 2LL, 16LL}) {
        CanonicalChain chain = zero_dimensional_diagram(k).canonical_chain();
        if (!chain.holds)
            throw CalcError("inconsistent-diagram",
                            "canonical-class relation failed at k = " + std::to_string(k));
    }
    line("phi_tilde_*(K_Xt) = 2 sum F_i  and  = 2 K_Yt + S_Yt + sum F_i   =>   "
         "2 K_Yt + S_Yt ~ sum F_i          [verified symbolically, k = 1, 2, 16]");
    line("zero-dimensional fixed locus  =>  S_Yt = 0  =>  c1(Yt) = -1/2 sum F_i");

    Rational c2F = c2_restriction(-2);
    line("c2(Yt)|_F = 3*(-2) + 3 = " + c2F.str() + "          [normal degree -2 plane]");

    // chi(O_Yt) = (1/24) c1.c2 = -(1/48) * (c2|F) * k.
    Rational per_plane = Rational(-1, 48) * c2F;
    line("chi(O_Yt) = (1/24) c1(Yt).c2(Yt) = -(1/48)(" + c2F.str() + ") * k = (" +
         per_plane.str() + ") * k");
    Rational chi_check = chi_of_resolution(Rational(0), 16);
    line("chi(O_Yt) = chi(O_Y) = 1  =>  k = 1 / (" + per_plane.str() + ")          [check: k = 16 gives chi = " +
         chi_check.str() + "]");

    IsolatedCount solved = solve_isolated_count(Rational(1));
    t.k = solved.k;
    line("k = " + std::to_string(solved.k));
    return t;
}

}  // namespace cycalc
