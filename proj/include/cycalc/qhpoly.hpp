// Sparse polynomials with exact rational coefficients in named coordinates,
// as used for (quasi-homogeneous) hypersurface equations.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cycalc/cyclotomic.hpp"
#include "cycalc/interval.hpp"
#include "cycalc/rational.hpp"

namespace cycalc {

struct Monomial {
    Rational coeff;
    std::vector<long long> exponents;  // one entry per coordinate
};

class QhPolynomial {
public:
    QhPolynomial() = default;
    static QhPolynomial from_terms(size_t var_count, std::vector<Monomial> terms);

    // Grammar: term ((+|-) term)*, term = factor (* factor)*, factor =
    // rational | name[^exponent].  Example: "x^10+y^10+z^10+w^5-t^2".
    static QhPolynomial parse(const std::string& text, const std::vector<std::string>& names);

    const std::vector<Monomial>& terms() const { return terms_; }
    size_t var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }

    // Weighted degree if all monomials agree; nullopt otherwise.
    std::optional<long long> weighted_degree(const std::vector<long long>& weights) const;

    // +1 / -1 when every monomial transforms with the same sign under the
    // coordinate sign action; the index of the first offending monomial
    // otherwise (via out param), with 0 returned.
    int sign_character(const std::vector<int>& signs, size_t* offending = nullptr) const;

    // Drops every monomial involving a coordinate outside `support`.
    QhPolynomial restrict_to_support(const std::vector<int>& support) const;

    QhPolynomial derivative(size_t var) const;

    Rational eval_rational(const std::vector<Rational>& x) const;
    Cyc eval_cyc(const std::vector<Cyc>& x) const;
    std::complex<double> eval_complex(const std::vector<std::complex<double>>& x) const;
    CInterval eval_interval(const std::vector<std::complex<double>>& x) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    size_t var_count_ = 0;
    std::vector<Monomial> terms_;  // combined, nonzero, sorted by exponents
};

}  // namespace cycalc
