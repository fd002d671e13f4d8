// Numerical models of divisor class groups on threefolds.
//
// A space is modelled by a finite list of named generators, a symmetric
// trilinear form with exact rational values (the triple-intersection
// tensor), the first Chern class as a divisor class, and the pairing of
// the second Chern class against each generator.  Codimension-2 cycles
// never appear except through that pairing; this is all the calculus the
// double-cover computations need.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycalc/rational.hpp"

namespace cycalc {

// Rational combination of named generators of one space's class group.
struct DivisorClass {
    std::string space_id;
    std::map<std::string, Rational> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::string space) : space_id(std::move(space)) {}
    DivisorClass(std::string space, std::map<std::string, Rational> c)
        : space_id(std::move(space)), coeffs(std::move(c)) {
        prune();
    }

    Rational coeff(const std::string& gen) const {
        auto it = coeffs.find(gen);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return coeffs.empty(); }

    DivisorClass& add(const std::string& gen, const Rational& c);

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Rational& c, const DivisorClass& d);
    DivisorClass operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.space_id == b.space_id && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

    std::string str() const;

private:
    void prune();  // drop explicit zeros so equality is canonical
};

struct SpaceModel {
    std::string id;
    std::vector<std::string> generators;
    // Symmetric triple tensor, keyed by the sorted generator-name triple.
    std::map<std::array<std::string, 3>, Rational> triple;
    DivisorClass c1;
    std::map<std::string, Rational> c2_pairing;
    long long half_points = 0;          // count of 1/2(1,1,1) points
    std::optional<Rational> euler;

    bool has_generator(const std::string& name) const;

    // Installs a tensor entry (symmetrized key).
    void set_triple(const std::string& a, const std::string& b, const std::string& c,
                    const Rational& value);
    Rational triple_entry(const std::string& a, const std::string& b,
                          const std::string& c) const;

    // Convenience constructor for a class on this space.
    DivisorClass cls(std::initializer_list<std::pair<std::string, Rational>> terms) const;

    void validate() const;  // generator references, half_points >= 0
};

// Exact trilinear, permutation-symmetric product.  All three classes must
// belong to `space`; otherwise a "foreign-class" error is thrown.
Rational triple_product(const SpaceModel& space, const DivisorClass& a,
                        const DivisorClass& b, const DivisorClass& c);

// Linear extension of the c2 pairing to an arbitrary class of the space.
Rational c2_dot(const SpaceModel& space, const DivisorClass& d);

}  // namespace cycalc
