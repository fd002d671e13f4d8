#include "cycalc/divisor.hpp"

#include <algorithm>

namespace cycalc {

void DivisorClass::prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->second.is_zero())
            it = coeffs.erase(it);
        else
            ++it;
    }
}

DivisorClass& DivisorClass::add(const std::string& gen, const Rational& c) {
    auto [it, inserted] = coeffs.emplace(gen, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
    return *this;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    if (a.space_id != b.space_id)
        throw CalcError("foreign-class", "adding classes of different spaces '" + a.space_id +
                                             "' and '" + b.space_id + "'");
    DivisorClass r = a;
    for (const auto& [g, c] : b.coeffs) r.add(g, c);
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(const Rational& c, const DivisorClass& d) {
    DivisorClass r(d.space_id);
    if (c.is_zero()) return r;
    for (const auto& [g, v] : d.coeffs) r.coeffs.emplace(g, c * v);
    return r;
}

std::string DivisorClass::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : coeffs) {
        if (!s.empty()) s += " + ";
        if (c == Rational(1))
            s += g;
        else
            s += c.str() + "*" + g;
    }
    return s;
}

bool SpaceModel::has_generator(const std::string& name) const {
    return std::find(generators.begin(), generators.end(), name) != generators.end();
}

static std::array<std::string, 3> triple_key(std::string a, std::string b, std::string c) {
    std::array<std::string, 3> k{std::move(a), std::move(b), std::move(c)};
    std::sort(k.begin(), k.end());
    return k;
}

void SpaceModel::set_triple(const std::string& a, const std::string& b, const std::string& c,
                            const Rational& value) {
    if (value.is_zero())
        triple.erase(triple_key(a, b, c));
    else
        triple[triple_key(a, b, c)] = value;
}

Rational SpaceModel::triple_entry(const std::string& a, const std::string& b,
                                  const std::string& c) const {
    auto it = triple.find(triple_key(a, b, c));
    return it == triple.end() ? Rational(0) : it->second;
}

DivisorClass SpaceModel::cls(
    std::initializer_list<std::pair<std::string, Rational>> terms) const {
    DivisorClass d(id);
    for (const auto& [g, c] : terms) {
        if (!has_generator(g))
            throw CalcError("foreign-class", "space '" + id + "' has no generator '" + g + "'");
        d.add(g, c);
    }
    return d;
}

void SpaceModel::validate() const {
    if (half_points < 0)
        throw CalcError("bad-space", "space '" + id + "' has negative half-point count");
    auto check_gen = [&](const std::string& g, const char* where) {
        if (!has_generator(g))
            throw CalcError("bad-space", "space '" + id + "': unknown generator '" + g +
                                             "' in " + where);
    };
    for (const auto& [key, v] : triple)
        for (const auto& g : key) check_gen(g, "triple tensor");
    for (const auto& [g, c] : c1.coeffs) check_gen(g, "c1");
    for (const auto& [g, v] : c2_pairing) check_gen(g, "c2 pairing");
    if (!c1.coeffs.empty() && c1.space_id != id)
        throw CalcError("bad-space", "space '" + id + "': c1 belongs to '" + c1.space_id + "'");
}

static void require_owned(const SpaceModel& space, const DivisorClass& d) {
    if (d.space_id != space.id)
        throw CalcError("foreign-class", "class on '" + d.space_id +
                                             "' used with space '" + space.id + "'");
    for (const auto& [g, c] : d.coeffs)
        if (!space.has_generator(g))
            throw CalcError("foreign-class",
                            "space '" + space.id + "' has no generator '" + g + "'");
}

Rational triple_product(const SpaceModel& space, const DivisorClass& a,
                        const DivisorClass& b, const DivisorClass& c) {
    require_owned(space, a);
    require_owned(space, b);
    require_owned(space, c);
    Rational total(0);
    for (const auto& [ga, ca] : a.coeffs)
        for (const auto& [gb, cb] : b.coeffs) {
            Rational cab = ca * cb;
            for (const auto& [gc, cc] : c.coeffs) {
                Rational t = space.triple_entry(ga, gb, gc);
                if (!t.is_zero()) total += cab * cc * t;
            }
        }
    return total;
}

Rational c2_dot(const SpaceModel& space, const DivisorClass& d) {
    require_owned(space, d);
    Rational total(0);
    for (const auto& [g, c] : d.coeffs) {
        auto it = space.c2_pairing.find(g);
        if (it != space.c2_pairing.end()) total += c * it->second;
    }
    return total;
}

}  // namespace cycalc
