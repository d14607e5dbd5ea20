#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "puiseux/errors.hpp"

namespace puiseux {

/// Arbitrary-precision exact fraction, always kept canonical:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) fail(Errc::zero_denominator, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(Errc::not_invertible, "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) fail(Errc::not_invertible, "inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1), base(v_);
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return Rational(std::move(r));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return v_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    std::string t(s);
    mpq_class v;
    if (v.set_str(t, 10) != 0) fail(Errc::parse, "bad rational literal: " + t);
    if (v.get_den() == 0) fail(Errc::zero_denominator, "rational with zero denominator: " + t);
    v.canonicalize();
    return Rational(std::move(v));
}

// Prototype-based constructors shared with the polynomial / rational-function
// coefficient types, so generic series code can make constants of any field.
inline Rational constant_like(const Rational&, const Rational& v) { return v; }
inline Rational zero_like(const Rational& like) { return constant_like(like, Rational(0)); }
inline Rational one_like(const Rational& like) { return constant_like(like, Rational(1)); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace puiseux
