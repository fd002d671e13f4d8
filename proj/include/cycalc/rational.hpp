// Exact rational arithmetic on 64-bit numerator/denominator.
//
// Every quantity in the divisor calculus (triple products, Chern pairings,
// Euler characteristics) is an exact rational; floating point never enters
// the core library.  Intermediate products are computed in 128-bit and any
// result that does not fit int64 throws, so silent wraparound is impossible.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cycalc {

class CalcError : public std::runtime_error {
public:
    CalcError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Throws unless the value is an integer.
    long long as_integer() const {
        if (den_ != 1) throw CalcError("not-integral", "rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator-() const { return Rational(checked_neg(num_), den_, already_normal{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                        checked(i128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw CalcError("division-by-zero", "rational division by zero");
        return Rational(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Non-negative integer exponent.
    Rational pow(int e) const {
        if (e < 0) return Rational(1) / pow(-e);
        Rational r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    // Canonical rendering: "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    double to_double() const { return double(num_) / double(den_); }

    // Accepts "p" and "p/q" with optional leading sign.
    static Rational parse(std::string_view text);

private:
    struct already_normal {};
    Rational(long long n, long long d, already_normal) : num_(n), den_(d) {}

    using i128 = __int128;

    static long long checked(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<long long>(v);
    }
    static long long checked_neg(long long v) {
        if (v == INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
        return -v;
    }

    void normalize() {
        if (den_ == 0) throw CalcError("division-by-zero", "rational with zero denominator");
        if (den_ < 0) { num_ = checked_neg(num_); den_ = checked_neg(den_); }
        unsigned long long a = num_ < 0 ? 0ULL - (unsigned long long)num_ : (unsigned long long)num_;
        unsigned long long g = std::gcd(a, (unsigned long long)den_);
        if (g > 1) { num_ /= (long long)g; den_ /= (long long)g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw CalcError("bad-rational", "cannot parse rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    size_t slash = text.find('/');
    auto to_ll = [&](std::string_view s) -> long long {
        if (s.empty()) fail();
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(std::string(s), &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != s.size()) fail();
        return v;
    };
    if (slash == std::string_view::npos) return Rational(to_ll(text));
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
}

}  // namespace cycalc
