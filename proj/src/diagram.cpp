#include "cycalc/diagram.hpp"

#include <nlohmann/json.hpp>

namespace cycalc {

CoverMap cover_map_from_string(const std::string& name) {
    if (name == "f") return CoverMap::f;
    if (name == "g") return CoverMap::g;
    if (name == "phi") return CoverMap::phi;
    if (name == "phi_tilde") return CoverMap::phi_tilde;
    throw CalcError("unknown-map", "unknown map id '" + name + "'");
}

std::string to_string(CoverMap m) {
    switch (m) {
        case CoverMap::f: return "f";
        case CoverMap::g: return "g";
        case CoverMap::phi: return "phi";
        case CoverMap::phi_tilde: return "phi_tilde";
    }
    return "?";
}

DiagramContext::DiagramContext(SpaceModel X, SpaceModel Y, SpaceModel Xt, SpaceModel Yt,
                               CoverDiagram diagram)
    : X_(std::move(X)), Y_(std::move(Y)), Xt_(std::move(Xt)), Yt_(std::move(Yt)),
      diagram_(std::move(diagram)) {
    validate();
}

void DiagramContext::validate() const {
    X_.validate();
    Y_.validate();
    Xt_.validate();
    Yt_.validate();
    if ((long long)diagram_.exceptional_E.size() != diagram_.k ||
        (long long)diagram_.exceptional_F.size() != diagram_.k)
        throw CalcError("inconsistent-diagram",
                        "exceptional generator count does not match k");
    for (const auto& e : diagram_.exceptional_E)
        if (!Xt_.has_generator(e))
            throw CalcError("inconsistent-diagram", "Xt lacks exceptional generator " + e);
    for (const auto& f : diagram_.exceptional_F)
        if (!Yt_.has_generator(f))
            throw CalcError("inconsistent-diagram", "Yt lacks exceptional generator " + f);
    for (const auto& [ygen, xgen] : diagram_.phi_pullback) {
        if (!Y_.has_generator(ygen) || !X_.has_generator(xgen))
            throw CalcError("inconsistent-diagram",
                            "phi pullback maps unknown generator " + ygen + " -> " + xgen);
    }
    if (diagram_.s < 0)
        throw CalcError("inconsistent-diagram", "involution index s must be non-negative");
}

const SpaceModel& DiagramContext::space(const std::string& id) const {
    if (id == X_.id) return X_;
    if (id == Y_.id) return Y_;
    if (id == Xt_.id) return Xt_;
    if (id == Yt_.id) return Yt_;
    throw CalcError("unknown-space", "diagram has no space '" + id + "'");
}

SpaceModel& DiagramContext::mutable_space(const std::string& id) {
    return const_cast<SpaceModel&>(space(id));
}

DivisorClass DiagramContext::sum_E() const {
    DivisorClass d(Xt_.id);
    for (const auto& e : diagram_.exceptional_E) d.add(e, Rational(1));
    return d;
}

DivisorClass DiagramContext::sum_F() const {
    DivisorClass d(Yt_.id);
    for (const auto& f : diagram_.exceptional_F) d.add(f, Rational(1));
    return d;
}

DivisorClass DiagramContext::branch_transform() const {
    return pullback(CoverMap::g, diagram_.branch_surface_class);
}

DivisorClass DiagramContext::pullback(CoverMap m, const DivisorClass& d) const {
    switch (m) {
        case CoverMap::f: {  // X -> Xt, generator names are shared
            if (d.space_id != X_.id)
                throw CalcError("foreign-class", "f* expects a class on " + X_.id);
            DivisorClass r(Xt_.id);
            for (const auto& [g, c] : d.coeffs) r.add(g, c);
            return r;
        }
        case CoverMap::g: {  // Y -> Yt
            if (d.space_id != Y_.id)
                throw CalcError("foreign-class", "g* expects a class on " + Y_.id);
            DivisorClass r(Yt_.id);
            for (const auto& [g, c] : d.coeffs) r.add(g, c);
            return r;
        }
        case CoverMap::phi: {  // Y -> X through the generator correspondence
            if (d.space_id != Y_.id)
                throw CalcError("foreign-class", "phi* expects a class on " + Y_.id);
            DivisorClass r(X_.id);
            for (const auto& [g, c] : d.coeffs) {
                auto it = diagram_.phi_pullback.find(g);
                if (it == diagram_.phi_pullback.end())
                    throw CalcError("foreign-class", "phi* undefined on generator " + g);
                r.add(it->second, c);
            }
            return r;
        }
        case CoverMap::phi_tilde: {  // Yt -> Xt; branch planes pull back doubled
            if (d.space_id != Yt_.id)
                throw CalcError("foreign-class", "phi_tilde* expects a class on " + Yt_.id);
            DivisorClass r(Xt_.id);
            for (const auto& [g, c] : d.coeffs) {
                auto fit = std::find(diagram_.exceptional_F.begin(),
                                     diagram_.exceptional_F.end(), g);
                if (fit != diagram_.exceptional_F.end()) {
                    size_t i = fit - diagram_.exceptional_F.begin();
                    r.add(diagram_.exceptional_E[i], Rational(2) * c);
                } else {
                    auto it = diagram_.phi_pullback.find(g);
                    if (it == diagram_.phi_pullback.end())
                        throw CalcError("foreign-class", "phi_tilde* undefined on generator " + g);
                    r.add(it->second, c);
                }
            }
            return r;
        }
    }
    throw CalcError("unknown-map", "unreachable map id");
}

DivisorClass DiagramContext::pushforward_cover(const DivisorClass& d) const {
    if (d.space_id != Xt_.id)
        throw CalcError("foreign-class", "phi_tilde_* expects a class on " + Xt_.id);
    // Invert the generator correspondence on the pullback part.
    std::map<std::string, std::string> to_y;
    for (const auto& [ygen, xgen] : diagram_.phi_pullback) to_y[xgen] = ygen;
    DivisorClass r(Yt_.id);
    for (const auto& [g, c] : d.coeffs) {
        auto eit = std::find(diagram_.exceptional_E.begin(), diagram_.exceptional_E.end(), g);
        if (eit != diagram_.exceptional_E.end()) {
            size_t i = eit - diagram_.exceptional_E.begin();
            r.add(diagram_.exceptional_F[i], c);  // E_i maps isomorphically onto F_i
        } else {
            auto it = to_y.find(g);
            if (it == to_y.end())
                throw CalcError("unsupported-basis",
                                "class not expressible in generators {phi_tilde-pullbacks, E_i}: " + g);
            r.add(it->second, Rational(2) * c);  // degree-2 projection formula
        }
    }
    return r;
}

CanonicalChain DiagramContext::canonical_chain() const {
    if (!X_.c1.is_zero())
        throw CalcError("not-calabi-yau", "canonical chain requires K_X = 0 on " + X_.id);
    CanonicalChain out;
    // Blow-up at k points: K_Xt = f*(K_X) + 2 sum E_i = 2 sum E_i.
    out.K_Xt = pullback(CoverMap::f, -X_.c1) + Rational(2) * sum_E();
    out.K_Yt = -Yt_.c1;
    // Route 1: push forward K_Xt directly.
    DivisorClass route1 = pushforward_cover(out.K_Xt);
    // Route 2: Hurwitz K_Xt = phi_tilde*(K_Yt) + S_Xt + sum E_i pushes to
    // 2 K_Yt + S_Yt + sum F_i.
    DivisorClass route2 =
        Rational(2) * out.K_Yt + branch_transform() + sum_F();
    out.relation_lhs = Rational(2) * out.K_Yt + branch_transform();
    out.relation_rhs = sum_F();
    out.holds = (route1 == route2);
    return out;
}

DiagramContext DiagramContext::build_double_cover(SpaceModel y, long long k, long long s,
                                                  const std::string& hprime,
                                                  const std::vector<std::string>& x_names) {
    if (k < 0) throw CalcError("inconsistent-diagram", "negative isolated point count");
    if (s < 0) throw CalcError("inconsistent-diagram", "negative involution index");
    if (!y.has_generator(hprime))
        throw CalcError("foreign-class", "quotient space has no generator '" + hprime + "'");
    if (x_names.size() != y.generators.size())
        throw CalcError("inconsistent-diagram", "x_names must parallel the Y generator list");
    // -2K_Y = s*H' pins c1(Y).
    DivisorClass expected_c1(y.id);
    expected_c1.add(hprime, Rational(s, 2));
    if (y.c1 != expected_c1)
        throw CalcError("inconsistent-diagram",
                        "c1(Y) must equal (s/2)*" + hprime + " (got " + y.c1.str() + ")");
    y.half_points = k;

    std::map<std::string, std::string> phi_map;
    for (size_t i = 0; i < y.generators.size(); ++i) phi_map[y.generators[i]] = x_names[i];

    // X: the double cover. Triple products double; K_X = 0.
    SpaceModel x;
    x.id = y.id + ".cover";
    x.generators = x_names;
    for (const auto& [key, v] : y.triple)
        x.set_triple(phi_map.at(key[0]), phi_map.at(key[1]), phi_map.at(key[2]), Rational(2) * v);
    x.c1 = DivisorClass(x.id);
    // Second Chern pairing of the cover: pullback part plus ramification
    // square, c2(X).phi*D = 2 c2(Y).D + R^2.phi*D with R = (s/2) H.
    const std::string h = phi_map.at(hprime);
    for (const auto& [ygen, xgen] : phi_map) {
        Rational base(0);
        auto it = y.c2_pairing.find(ygen);
        if (it != y.c2_pairing.end()) base = it->second;
        Rational ram = Rational(s * s, 4) * x.triple_entry(h, h, xgen);
        x.c2_pairing[xgen] = Rational(2) * base + ram;
    }
    x.half_points = 0;

    auto gen_names = [](const char* stem, long long n) {
        std::vector<std::string> v;
        for (long long i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
        return v;
    };
    CoverDiagram d;
    d.k = k;
    d.s = s;
    d.exceptional_E = gen_names("E", k);
    d.exceptional_F = gen_names("F", k);
    d.phi_pullback = phi_map;
    d.branch_surface_class = DivisorClass(y.id);
    if (s > 0) d.branch_surface_class.add(hprime, Rational(s));

    // Xt: blow up X at the k fixed points.  E_i is a plane with normal
    // degree -1, so E_i^3 = 1 and E_i is orthogonal to pullbacks.
    SpaceModel xt;
    xt.id = x.id + ".blowup";
    xt.generators = x.generators;
    xt.triple = x.triple;
    for (const auto& e : d.exceptional_E) {
        xt.generators.push_back(e);
        xt.set_triple(e, e, e, Rational(1));
    }
    xt.c1 = DivisorClass(xt.id);
    for (const auto& e : d.exceptional_E) xt.c1.add(e, Rational(-2));
    for (const auto& [g, v] : x.c2_pairing) xt.c2_pairing[g] = v;
    for (const auto& e : d.exceptional_E) xt.c2_pairing[e] = Rational(0);

    // Yt: blow up Y at the images.  F_i has normal degree -2, so F_i^3 = 4
    // and c2(Yt).F_i = -3.
    SpaceModel yt;
    yt.id = y.id + ".blowup";
    yt.generators = y.generators;
    yt.triple = y.triple;
    for (const auto& f : d.exceptional_F) {
        yt.generators.push_back(f);
        yt.set_triple(f, f, f, Rational(4));
    }
    yt.c1 = DivisorClass(yt.id);
    for (const auto& [g, c] : y.c1.coeffs) yt.c1.add(g, c);
    for (const auto& f : d.exceptional_F) yt.c1.add(f, Rational(-1, 2));
    for (const auto& [g, v] : y.c2_pairing) yt.c2_pairing[g] = v;
    for (const auto& f : d.exceptional_F) yt.c2_pairing[f] = Rational(-3);

    d.X = x.id;
    d.Y = y.id;
    d.Xt = xt.id;
    d.Yt = yt.id;
    return DiagramContext(std::move(x), std::move(y), std::move(xt), std::move(yt),
                          std::move(d));
}

// ---------------------------------------------------------------------------
// JSON interface

using nlohmann::json;

static Rational rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw CalcError("bad-json", "expected rational as integer or \"p/q\" string");
}

static DivisorClass class_from_json(const std::string& space_id, const json& j) {
    DivisorClass d(space_id);
    for (auto it = j.begin(); it != j.end(); ++it) d.add(it.key(), rat_from_json(it.value()));
    return d;
}

static json class_to_json(const DivisorClass& d) {
    json j = json::object();
    for (const auto& [g, c] : d.coeffs) j[g] = c.str();
    return j;
}

SpaceModel space_from_json(const json& j) {
    SpaceModel s;
    s.id = j.at("id").get<std::string>();
    for (const auto& g : j.at("generators")) s.generators.push_back(g.get<std::string>());
    if (j.contains("triple"))
        for (const auto& entry : j.at("triple")) {
            const auto& gens = entry.at("gens");
            if (gens.size() != 3) throw CalcError("bad-json", "triple entry needs 3 generators");
            s.set_triple(gens[0].get<std::string>(), gens[1].get<std::string>(),
                         gens[2].get<std::string>(), rat_from_json(entry.at("value")));
        }
    if (j.contains("c1")) s.c1 = class_from_json(s.id, j.at("c1"));
    else s.c1 = DivisorClass(s.id);
    if (j.contains("c2"))
        for (auto it = j.at("c2").begin(); it != j.at("c2").end(); ++it)
            s.c2_pairing[it.key()] = rat_from_json(it.value());
    if (j.contains("half_points")) s.half_points = j.at("half_points").get<long long>();
    if (j.contains("euler")) s.euler = rat_from_json(j.at("euler"));
    s.validate();
    return s;
}

json space_to_json(const SpaceModel& s) {
    json j;
    j["id"] = s.id;
    j["generators"] = s.generators;
    json triples = json::array();
    for (const auto& [key, v] : s.triple)
        triples.push_back({{"gens", {key[0], key[1], key[2]}}, {"value", v.str()}});
    j["triple"] = triples;
    j["c1"] = class_to_json(s.c1);
    json c2 = json::object();
    for (const auto& [g, v] : s.c2_pairing) c2[g] = v.str();
    j["c2"] = c2;
    j["half_points"] = s.half_points;
    if (s.euler) j["euler"] = s.euler->str();
    return j;
}

DiagramContext diagram_from_json(const json& doc) {
    const json& spaces = doc.at("spaces");
    const json& dj = doc.at("diagram");
    CoverDiagram d;
    d.X = dj.at("X").get<std::string>();
    d.Y = dj.at("Y").get<std::string>();
    d.Xt = dj.at("Xt").get<std::string>();
    d.Yt = dj.at("Yt").get<std::string>();
    d.k = dj.at("k").get<long long>();
    d.s = dj.at("s").get<long long>();
    for (const auto& e : dj.at("exceptional_E")) d.exceptional_E.push_back(e.get<std::string>());
    for (const auto& f : dj.at("exceptional_F")) d.exceptional_F.push_back(f.get<std::string>());
    for (auto it = dj.at("phi_pullback").begin(); it != dj.at("phi_pullback").end(); ++it)
        d.phi_pullback[it.key()] = it.value().get<std::string>();
    auto get_space = [&](const std::string& id) {
        if (!spaces.contains(id)) throw CalcError("bad-json", "missing space '" + id + "'");
        return space_from_json(spaces.at(id));
    };
    SpaceModel X = get_space(d.X), Y = get_space(d.Y), Xt = get_space(d.Xt), Yt = get_space(d.Yt);
    d.branch_surface_class = class_from_json(d.Y, dj.at("branch_surface_class"));
    return DiagramContext(std::move(X), std::move(Y), std::move(Xt), std::move(Yt),
                          std::move(d));
}

json diagram_to_json(const DiagramContext& ctx) {
    json doc;
    json spaces = json::object();
    for (const SpaceModel* s : {&ctx.X(), &ctx.Y(), &ctx.Xt(), &ctx.Yt()})
        spaces[s->id] = space_to_json(*s);
    doc["spaces"] = spaces;
    const CoverDiagram& d = ctx.diagram();
    json dj;
    dj["X"] = d.X;
    dj["Y"] = d.Y;
    dj["Xt"] = d.Xt;
    dj["Yt"] = d.Yt;
    dj["k"] = d.k;
    dj["s"] = d.s;
    dj["branch_surface_class"] = class_to_json(d.branch_surface_class);
    dj["exceptional_E"] = d.exceptional_E;
    dj["exceptional_F"] = d.exceptional_F;
    json pm = json::object();
    for (const auto& [y, x] : d.phi_pullback) pm[y] = x;
    dj["phi_pullback"] = pm;
    doc["diagram"] = dj;
    return doc;
}

}  // namespace cycalc
