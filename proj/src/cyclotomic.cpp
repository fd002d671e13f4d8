#include "cycalc/cyclotomic.hpp"

#include <cmath>
#include <numbers>

namespace cycalc {

bool Cyc::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (int i = 1; i < kDegree; ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyc::rational_part() const {
    if (!is_rational())
        throw CalcError("not-rational", "cyclotomic value " + str() + " is not rational");
    return c_[0];
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int i = 0; i < Cyc::kDegree; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc r;
    for (int i = 0; i < Cyc::kDegree; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (int i = 0; i < kDegree; ++i) r.c_[i] = -c_[i];
    return r;
}

Cyc operator*(const Rational& r, const Cyc& a) {
    Cyc out;
    for (int i = 0; i < Cyc::kDegree; ++i) out.c_[i] = r * a.c_[i];
    return out;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    // Convolve to degree 14, then fold with z^8 = z^4 - 1.
    std::array<Rational, 2 * Cyc::kDegree - 1> t{};
    for (int i = 0; i < Cyc::kDegree; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < Cyc::kDegree; ++j) {
            if (b.c_[j].is_zero()) continue;
            t[i + j] += a.c_[i] * b.c_[j];
        }
    }
    for (int i = 2 * Cyc::kDegree - 2; i >= Cyc::kDegree; --i) {
        if (t[i].is_zero()) continue;
        t[i - 4] += t[i];
        t[i - 8] -= t[i];
        t[i] = Rational(0);
    }
    Cyc r;
    for (int i = 0; i < Cyc::kDegree; ++i) r.c_[i] = t[i];
    return r;
}

Cyc Cyc::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc r(Rational(1));
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Cyc Cyc::zeta_pow(long long j) {
    j %= kOrder;
    if (j < 0) j += kOrder;
    Cyc z;
    z.c_[1] = Rational(1);
    return z.pow(j);
}

Cyc Cyc::sqrt_squarefree(long long d) {
    switch (d) {
        case 1: return Cyc(Rational(1));
        case -1: return zeta_pow(6);
        case 2: return zeta_pow(3) + zeta_pow(21);    // 2 cos(pi/4)
        case 3: return zeta_pow(2) + zeta_pow(22);    // 2 cos(pi/6)
        case 6: return sqrt_squarefree(2) * sqrt_squarefree(3);
        case -2: return zeta_pow(6) * sqrt_squarefree(2);
        case -3: return zeta_pow(6) * sqrt_squarefree(3);
        case -6: return zeta_pow(6) * sqrt_squarefree(6);
        default:
            throw CalcError("not-in-field",
                            "sqrt(" + std::to_string(d) + ") is not in the 24th cyclotomic field");
    }
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw CalcError("division-by-zero", "inverse of zero cyclotomic value");
    // Solve (this) * x = 1 as an 8x8 rational linear system: column j of the
    // matrix is (this) * z^j.
    Rational m[kDegree][kDegree];
    for (int j = 0; j < kDegree; ++j) {
        Cyc col = *this * zeta_pow(j);
        for (int i = 0; i < kDegree; ++i) m[i][j] = col.c_[i];
    }
    Rational rhs[kDegree] = {Rational(1)};
    // Gaussian elimination with partial (first-nonzero) pivoting.
    int perm[kDegree];
    for (int i = 0; i < kDegree; ++i) perm[i] = i;
    for (int col = 0; col < kDegree; ++col) {
        int pivot = -1;
        for (int row = col; row < kDegree; ++row)
            if (!m[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) throw CalcError("division-by-zero", "singular multiplication matrix");
        if (pivot != col) {
            for (int j = 0; j < kDegree; ++j) std::swap(m[pivot][j], m[col][j]);
            std::swap(rhs[pivot], rhs[col]);
        }
        Rational inv_p = Rational(1) / m[col][col];
        for (int j = col; j < kDegree; ++j) m[col][j] *= inv_p;
        rhs[col] *= inv_p;
        for (int row = 0; row < kDegree; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational factor = m[row][col];
            for (int j = col; j < kDegree; ++j) m[row][j] -= factor * m[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    Cyc x;
    for (int i = 0; i < kDegree; ++i) x.c_[i] = rhs[i];
    return x;
}

std::complex<double> Cyc::approx() const {
    std::complex<double> z = std::polar(1.0, std::numbers::pi / 12.0);
    std::complex<double> acc = 0.0, p = 1.0;
    for (int i = 0; i < kDegree; ++i) {
        acc += c_[i].to_double() * p;
        p *= z;
    }
    return acc;
}

std::optional<Cyc::PolarForm> Cyc::polar_form() const {
    if (is_zero()) return PolarForm{Rational(0), 0};
    for (int j = 0; j < kOrder; ++j) {
        Cyc w = *this * zeta_pow(-j);
        if (!w.is_rational()) continue;
        Rational q = w.c_[0];
        if (q > Rational(0)) return PolarForm{q, j};
        return PolarForm{-q, (j + 12) % kOrder};
    }
    return std::nullopt;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i].is_zero()) continue;
        std::string term = c_[i].str();
        if (i > 0) {
            if (term == "1")
                term = "";
            else if (term == "-1")
                term = "-";
            else
                term += "*";
            term += "z";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

std::pair<long long, long long> split_square(long long n) {
    long long sign = n < 0 ? -1 : 1;
    long long v = n < 0 ? -n : n;
    long long t = 1;
    for (long long p = 2; p * p <= v; ++p) {
        while (v % (p * p) == 0) {
            v /= p * p;
            t *= p;
        }
    }
    return {t, sign * v};
}

std::optional<Rational> exact_nth_root(const Rational& r, long long n) {
    if (n <= 0) throw CalcError("bad-argument", "nth root needs n >= 1");
    if (r.is_zero()) return Rational(0);
    auto int_root = [&](long long v) -> std::optional<long long> {
        if (v < 0) return std::nullopt;
        long long guess = (long long)std::llround(std::pow((double)v, 1.0 / (double)n));
        for (long long c = std::max(0LL, guess - 2); c <= guess + 2; ++c) {
            long long acc = 1;
            bool overflow = false;
            for (long long i = 0; i < n; ++i) {
                if (acc != 0 && std::abs(c) > 0 &&
                    std::abs(acc) > INT64_MAX / std::max(1LL, std::abs(c))) {
                    overflow = true;
                    break;
                }
                acc *= c;
            }
            if (!overflow && acc == v) return c;
        }
        return std::nullopt;
    };
    long long num = r.num(), den = r.den();
    bool negative = num < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    auto rn = int_root(negative ? -num : num);
    auto rd = int_root(den);
    if (!rn || !rd) return std::nullopt;
    return Rational(negative ? -*rn : *rn, *rd);
}

std::optional<Cyc> sqrt_rational_in_field(const Rational& r) {
    if (r.is_zero()) return Cyc();
    // sqrt(p/q) = sqrt(p*q)/q; split p*q into t^2 * d.
    long long pq;
    if (__builtin_mul_overflow(r.num(), r.den(), &pq)) return std::nullopt;
    auto [t, d] = split_square(pq);
    long long ad = d < 0 ? -d : d;
    if (ad != 1 && ad != 2 && ad != 3 && ad != 6) return std::nullopt;
    return Rational(t, r.den()) * Cyc::sqrt_squarefree(d);
}

std::optional<std::vector<Cyc>> nth_roots_in_field(const Cyc& value, long long n) {
    if (n <= 0) throw CalcError("bad-argument", "nth root needs n >= 1");
    if (value.is_zero()) return std::vector<Cyc>{Cyc()};
    auto polar = value.polar_form();
    if (!polar) return std::nullopt;
    auto mag_root = exact_nth_root(polar->magnitude, n);
    if (!mag_root) return std::nullopt;
    // All n roots of z^j exist in mu_24 iff n*m = j (mod 24) is solvable and
    // mu_n is inside mu_24.
    if (24 % n != 0) return std::nullopt;
    long long j = polar->power;
    long long g = std::gcd(n, (long long)24);
    if (j % g != 0) return std::nullopt;
    long long m0 = -1;
    for (long long m = 0; m < 24; ++m)
        if ((n * m) % 24 == j) { m0 = m; break; }
    if (m0 < 0) return std::nullopt;
    std::vector<Cyc> roots;
    roots.reserve(n);
    for (long long t = 0; t < n; ++t)
        roots.push_back(*mag_root * Cyc::zeta_pow(m0 + t * (24 / n)));
    return roots;
}

}  // namespace cycalc
