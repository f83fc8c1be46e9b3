#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lkss/errors.hpp"

namespace lkss {

/// Exact fraction, always kept in lowest terms with a positive denominator.
/// Intermediate products go through 128-bit integers; a result that does not
/// fit back into 64 bits throws instead of silently wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(long long num, long long den) { assign(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational& operator+=(const Rational& o) {
        return assign128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator-=(const Rational& o) {
        return assign128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator*=(const Rational& o) {
        return assign128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DivisionByZeroError("rational division by zero");
        return assign128(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "num/den", e.g. "3/4", "0/1", "-5/2".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "num/den" or a bare integer "num".
    static Rational parse(const std::string& s);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    using i128 = __int128;

    void assign(long long num, long long den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    Rational& assign128(i128 num, i128 den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) { i128 t = a % b; a = b; b = t; }  // gcd
        if (a > 1) { num /= a; den /= a; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw Error("rational overflow");
        num_ = static_cast<long long>(num);
        den_ = static_cast<long long>(den);
        return *this;
    }

    long long num_;
    long long den_;
};

/// max(x, 0); the positive-part clip used throughout the bounds.
inline Rational pos_part(const Rational& x) { return x.num() < 0 ? Rational(0) : x; }

inline const Rational& rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw InvalidParamsError("trailing junk in rational: " + s);
            return Rational(n);
        }
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw InvalidParamsError("bad numerator in rational: " + s);
        std::string den_part = s.substr(slash + 1);
        long long d = std::stoll(den_part, &used);
        if (used != den_part.size()) throw InvalidParamsError("bad denominator in rational: " + s);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw InvalidParamsError("cannot parse rational: " + s);
    } catch (const std::out_of_range&) {
        throw InvalidParamsError("rational out of range: " + s);
    }
}

}  // namespace lkss
