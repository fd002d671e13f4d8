// The blow-up / double-cover square.
//
//        Xt ---phi_tilde---> Yt
//        |                   |
//        f                   g
//        |                   |
//        X  -----phi------>  Y
//
// X is the Calabi-Yau total space, Y = X/involution its quotient, f and g
// the blow-ups at the k isolated fixed points (exceptional planes E_i on
// Xt, F_i on Yt), and phi_tilde the induced double cover branched along
// the transform of the fixed surface together with the F_i.
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cycalc/divisor.hpp"

namespace cycalc {

enum class CoverMap { f, g, phi, phi_tilde };

CoverMap cover_map_from_string(const std::string& name);
std::string to_string(CoverMap m);

struct CoverDiagram {
    std::string X, Y, Xt, Yt;                        // space ids
    long long k = 0;                                 // isolated fixed points
    long long s = 0;                                 // branch class = s * H'; 0 = no surface
    DivisorClass branch_surface_class;               // on Y
    std::vector<std::string> exceptional_E;          // generators on Xt
    std::vector<std::string> exceptional_F;          // generators on Yt
    std::map<std::string, std::string> phi_pullback; // Y generator -> X generator

    // Class-group Fano index: -2K_Y = s*H' with H' the Weil generator.
    Rational fano_index() const { return Rational(s, 2); }
};

// Result of chasing K through the square: the two expressions for the
// pushed-forward canonical class and the derived relation
// 2*K_Yt + S_Yt ~ sum F_i.
struct CanonicalChain {
    DivisorClass K_Xt;          // = 2 sum E_i
    DivisorClass K_Yt;          // from the Yt model
    DivisorClass relation_lhs;  // 2*K_Yt + S_Yt
    DivisorClass relation_rhs;  // sum F_i
    bool holds = false;
};

// Owns the four space models plus the diagram data and implements the
// functorial operations between them.
class DiagramContext {
public:
    DiagramContext(SpaceModel X, SpaceModel Y, SpaceModel Xt, SpaceModel Yt,
                   CoverDiagram diagram);

    // Builds the whole square from the quotient data: Y's model, the
    // isolated point count k and the involution index s (branch class
    // s*hprime; s = 0 means the fixed locus is zero-dimensional).
    // X generators are named via x_names (parallel to Y's generator list);
    // Y must satisfy c1(Y) = (s/2)*hprime.
    static DiagramContext build_double_cover(SpaceModel y, long long k, long long s,
                                             const std::string& hprime,
                                             const std::vector<std::string>& x_names);

    const SpaceModel& space(const std::string& id) const;
    const SpaceModel& X() const { return X_; }
    const SpaceModel& Y() const { return Y_; }
    const SpaceModel& Xt() const { return Xt_; }
    const SpaceModel& Yt() const { return Yt_; }
    const CoverDiagram& diagram() const { return diagram_; }
    SpaceModel& mutable_space(const std::string& id);  // for consistency tests

    // Pullback along one of the four maps; degree law
    //   triple(m* a, m* b, m* c) = deg(m) * triple(a, b, c)
    // with deg = 1 for the blow-ups f, g and deg = 2 for the covers.
    DivisorClass pullback(CoverMap m, const DivisorClass& d) const;

    // phi_tilde_*: E_i -> F_i and phi_tilde_* phi_tilde^* = 2.
    DivisorClass pushforward_cover(const DivisorClass& d) const;

    // Requires K_X = 0; derives Eq-style relation 2K_Yt + S_Yt ~ sum F_i by
    // pushing forward both expressions of K_Xt and flags any mismatch.
    CanonicalChain canonical_chain() const;

    DivisorClass sum_E() const;
    DivisorClass sum_F() const;
    DivisorClass branch_transform() const;  // S_Yt = g^* (branch class)

private:
    void validate() const;

    SpaceModel X_, Y_, Xt_, Yt_;
    CoverDiagram diagram_;
};

// Declarative JSON loading ("p/q" strings for all rationals).
SpaceModel space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const SpaceModel& s);
DiagramContext diagram_from_json(const nlohmann::json& doc);  // {"spaces": {...}, "diagram": {...}}
nlohmann::json diagram_to_json(const DiagramContext& ctx);

}  // namespace cycalc
