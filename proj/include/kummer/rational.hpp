#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace kummer {

using Int = std::int64_t;
using Wide = __int128;

// Everything user-facing stays in 64 bits; intermediates may use 128.
// A value that escapes the 64-bit range is a scale violation, reported
// rather than wrapped.
inline Int narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("integer overflow: value exceeds 64-bit range");
    return static_cast<Int>(v);
}

inline Wide wide_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit product");
    return r;
}

inline Wide wide_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit sum");
    return r;
}

inline Wide wide_sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit difference");
    return r;
}

// Exact fraction with positive denominator and reduced terms. Denominators
// here stay small (divisors of 2n+2 and single powers of two), so 64-bit
// storage with 128-bit intermediates never loses exactness.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}

    Rational(Int n, Int d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const Int g = std::gcd(n, d);  // d > 0, so g >= 1
        num_ = n / g;
        den_ = d / g;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(wide_add(wide_mul(a.num_, b.den_), wide_mul(b.num_, a.den_)),
                    wide_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(wide_sub(wide_mul(a.num_, b.den_), wide_mul(b.num_, a.den_)),
                    wide_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(wide_mul(a.num_, b.num_), wide_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return wide_mul(a.num_, b.den_) < wide_mul(b.num_, a.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        os << q.num_;
        if (q.den_ != 1) os << '/' << q.den_;
        return os;
    }

private:
    static Rational make(Wide n, Wide d) {
        if (d < 0) { n = -n; d = -d; }
        const Wide nn = n < 0 ? -n : n;
        Wide g = d;
        for (Wide a = nn; a;) { const Wide t = g % a; g = a; a = t; }
        if (g == 0) g = 1;
        return Rational(narrow(n / g), narrow(d / g));
    }

    Int num_, den_;
};

// Representative of q modulo 2Z, taken in [0, 2).
inline Rational mod_two(const Rational& q) {
    Wide n = Wide(q.num()) % (2 * Wide(q.den()));
    if (n < 0) n += 2 * Wide(q.den());
    return Rational(narrow(n), q.den());
}

}  // namespace kummer
