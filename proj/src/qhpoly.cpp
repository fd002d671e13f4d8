#include "cycalc/qhpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cycalc {

QhPolynomial QhPolynomial::from_terms(size_t var_count, std::vector<Monomial> terms) {
    std::map<std::vector<long long>, Rational> combined;
    for (auto& m : terms) {
        if (m.exponents.size() != var_count)
            throw CalcError("bad-polynomial", "monomial exponent arity mismatch");
        for (long long e : m.exponents)
            if (e < 0) throw CalcError("bad-polynomial", "negative exponent");
        combined[m.exponents] += m.coeff;
    }
    QhPolynomial p;
    p.var_count_ = var_count;
    for (auto& [exps, c] : combined)
        if (!c.is_zero()) p.terms_.push_back({c, exps});
    return p;
}

QhPolynomial QhPolynomial::parse(const std::string& text,
                                 const std::vector<std::string>& names) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    auto fail = [&](const std::string& why) {
        throw CalcError("bad-polynomial",
                        "parse error at position " + std::to_string(pos) + ": " + why);
    };
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    };
    auto match_name = [&]() -> int {
        skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (size_t i = 0; i < names.size(); ++i) {
            const std::string& n = names[i];
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = (int)i;
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    };

    std::vector<Monomial> terms;
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Rational sign(1);
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                fail("expected '+' or '-'");
            if (text[pos] == '-') sign = Rational(-1);
            ++pos;
        }
        first = false;
        Monomial m{sign, std::vector<long long>(names.size(), 0)};
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit((unsigned char)text[pos])) {
                long long num = parse_int();
                long long den = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = parse_int();
                }
                m.coeff *= Rational(num, den);
                saw_factor = true;
                continue;
            }
            int var = match_name();
            if (var < 0) break;
            long long exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = parse_int();
            }
            m.exponents[var] += exp;
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        terms.push_back(std::move(m));
        skip_ws();
    }
    if (terms.empty()) throw CalcError("bad-polynomial", "empty polynomial text");
    return from_terms(names.size(), std::move(terms));
}

std::optional<long long> QhPolynomial::weighted_degree(
    const std::vector<long long>& weights) const {
    if (weights.size() != var_count_)
        throw CalcError("bad-polynomial", "weight arity mismatch");
    std::optional<long long> deg;
    for (const auto& m : terms_) {
        long long d = 0;
        for (size_t i = 0; i < weights.size(); ++i) d += m.exponents[i] * weights[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

int QhPolynomial::sign_character(const std::vector<int>& signs, size_t* offending) const {
    if (signs.size() != var_count_)
        throw CalcError("bad-polynomial", "sign arity mismatch");
    int character = 0;
    for (size_t t = 0; t < terms_.size(); ++t) {
        int s = 1;
        for (size_t i = 0; i < signs.size(); ++i)
            if (signs[i] < 0 && terms_[t].exponents[i] % 2 != 0) s = -s;
        if (character == 0)
            character = s;
        else if (character != s) {
            if (offending) *offending = t;
            return 0;
        }
    }
    return character;
}

QhPolynomial QhPolynomial::restrict_to_support(const std::vector<int>& support) const {
    std::vector<bool> keep(var_count_, false);
    for (int i : support) keep.at(i) = true;
    std::vector<Monomial> kept;
    for (const auto& m : terms_) {
        bool ok = true;
        for (size_t i = 0; i < var_count_; ++i)
            if (m.exponents[i] > 0 && !keep[i]) { ok = false; break; }
        if (ok) kept.push_back(m);
    }
    return from_terms(var_count_, std::move(kept));
}

QhPolynomial QhPolynomial::derivative(size_t var) const {
    std::vector<Monomial> out;
    for (const auto& m : terms_) {
        if (m.exponents[var] == 0) continue;
        Monomial d = m;
        d.coeff *= Rational(m.exponents[var]);
        d.exponents[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(var_count_, std::move(out));
}

Rational QhPolynomial::eval_rational(const std::vector<Rational>& x) const {
    Rational acc(0);
    for (const auto& m : terms_) {
        Rational t = m.coeff;
        for (size_t i = 0; i < var_count_; ++i)
            if (m.exponents[i] > 0) t *= x.at(i).pow((int)m.exponents[i]);
        acc += t;
    }
    return acc;
}

Cyc QhPolynomial::eval_cyc(const std::vector<Cyc>& x) const {
    Cyc acc;
    for (const auto& m : terms_) {
        Cyc t(m.coeff);
        for (size_t i = 0; i < var_count_; ++i)
            if (m.exponents[i] > 0) t = t * x.at(i).pow(m.exponents[i]);
        acc = acc + t;
    }
    return acc;
}

std::complex<double> QhPolynomial::eval_complex(
    const std::vector<std::complex<double>>& x) const {
    std::complex<double> acc = 0.0;
    for (const auto& m : terms_) {
        std::complex<double> t = m.coeff.to_double();
        for (size_t i = 0; i < var_count_; ++i)
            for (long long e = 0; e < m.exponents[i]; ++e) t *= x.at(i);
        acc += t;
    }
    return acc;
}

CInterval QhPolynomial::eval_interval(const std::vector<std::complex<double>>& x) const {
    CInterval acc = CInterval::exact({0.0, 0.0});
    for (const auto& m : terms_) {
        CInterval t = CInterval::from_rational(m.coeff);
        for (size_t i = 0; i < var_count_; ++i)
            if (m.exponents[i] > 0) t = t * CInterval::exact(x.at(i)).pow(m.exponents[i]);
        acc = acc + t;
    }
    return acc;
}

std::string QhPolynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& m : terms_) {
        bool all_zero =
            std::all_of(m.exponents.begin(), m.exponents.end(), [](long long e) { return e == 0; });
        std::string body;
        for (size_t i = 0; i < var_count_; ++i) {
            if (m.exponents[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += names.at(i);
            if (m.exponents[i] > 1) body += "^" + std::to_string(m.exponents[i]);
        }
        std::string coeff = m.coeff.str();
        std::string term;
        if (all_zero)
            term = coeff;
        else if (coeff == "1")
            term = body;
        else if (coeff == "-1")
            term = "-" + body;
        else
            term = coeff + "*" + body;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace cycalc
