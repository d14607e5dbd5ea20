#pragma once

#include "puiseux/multipoly.hpp"

namespace puiseux {

/// Integer content of a rational-coefficient polynomial: the positive rational
/// c with p/c integer-coefficient and primitive. Zero polynomial has content 1.
inline Rational integer_content(const MultiPoly<Rational>& p) {
    if (p.is_zero_poly()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_class n = c.numerator();
        mpz_class d = c.denominator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class q(num_gcd, den_lcm);
    q.canonicalize();
    return Rational(std::move(q));
}

/// Per-variable minimum exponent over all terms (the common monomial factor).
inline ExpVec common_monomial(const MultiPoly<Rational>& p) {
    ExpVec m(p.reg()->size(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) { m = e; first = false; continue; }
        for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    }
    return m;
}

inline MultiPoly<Rational> divide_monomial(const MultiPoly<Rational>& p, const ExpVec& m) {
    MultiPoly<Rational> r(p.reg());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        for (size_t k = 0; k < f.size(); ++k) {
            f[k] -= m[k];
            if (f[k] < 0) fail(Errc::internal, "monomial division underflow");
        }
        r.add_term(f, c);
    }
    return r;
}

/// Quotient of multivariate polynomials over Q, normalized only by integer
/// content and common monomial factor (no full GCD). Equality is decided by
/// cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(nullreg()), den_(nullreg()) {
        num_ = MultiPoly<Rational>::zero(nullreg());
        den_ = MultiPoly<Rational>::constant(nullreg(), Rational(1));
    }

    RationalFunction(MultiPoly<Rational> num, MultiPoly<Rational> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero_poly()) fail(Errc::zero_denominator, "rational function with zero denominator");
        normalize();
    }

    static RationalFunction from_poly(MultiPoly<Rational> p) {
        auto reg = p.reg();
        return RationalFunction(std::move(p), MultiPoly<Rational>::constant(reg, Rational(1)));
    }

    static RationalFunction zero(VarRegistry::Ptr reg) {
        return from_poly(MultiPoly<Rational>::zero(std::move(reg)));
    }
    static RationalFunction constant(VarRegistry::Ptr reg, const Rational& v) {
        return from_poly(MultiPoly<Rational>::constant(std::move(reg), v));
    }
    static RationalFunction one(VarRegistry::Ptr reg) { return constant(std::move(reg), Rational(1)); }

    const MultiPoly<Rational>& num() const { return num_; }
    const MultiPoly<Rational>& den() const { return den_; }
    VarRegistry::Ptr registry() const { return num_.reg(); }

    bool is_zero_rf() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// True when the denominator is a constant times a single monomial.
    bool denominator_is_monomial() const { return den_.term_count() == 1; }

    RationalFunction operator-() const { return make_raw(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero_rf()) fail(Errc::not_invertible, "division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
    RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
    RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
    RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

    RationalFunction inverse() const {
        if (is_zero_rf()) fail(Errc::not_invertible, "inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return RationalFunction(num_.pow(e), den_.pow(e));
    }

    /// Cross-multiplication equality.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) {
            Rational c = den_.terms().begin()->second;
            if (c.is_one()) return num_.str();
            return num_.scaled(c.inverse()).str();
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static VarRegistry::Ptr nullreg() {
        static VarRegistry::Ptr r = VarRegistry::make({});
        return r;
    }

    static RationalFunction make_raw(MultiPoly<Rational> n, MultiPoly<Rational> d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (num_.is_zero_poly()) {
            den_ = MultiPoly<Rational>::constant(den_.reg(), Rational(1));
            return;
        }
        // common monomial factor of numerator and denominator
        ExpVec mn = common_monomial(num_);
        ExpVec md = common_monomial(den_);
        ExpVec m(mn.size());
        for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(mn[k], md[k]);
        if (total_degree(m) > 0) {
            num_ = divide_monomial(num_, m);
            den_ = divide_monomial(den_, m);
        }
        // integer content: keep both parts integer and primitive, fold the
        // ratio of contents into the numerator's constant scale
        Rational cn = integer_content(num_);
        Rational cd = integer_content(den_);
        Rational ratio = cn / cd; // positive
        num_ = num_.scaled(cn.inverse());
        den_ = den_.scaled(cd.inverse());
        num_ = num_.scaled(Rational(ratio.numerator()));
        den_ = den_.scaled(Rational(ratio.denominator()));
        // deterministic sign: leading denominator coefficient positive
        if (den_.terms().rbegin()->second.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    MultiPoly<Rational> num_, den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero_rf(); }
inline RationalFunction zero_like(const RationalFunction& like) {
    return RationalFunction::zero(like.registry());
}
inline RationalFunction constant_like(const RationalFunction& like, const Rational& v) {
    return RationalFunction::constant(like.registry(), v);
}
inline RationalFunction one_like(const RationalFunction& like) {
    return constant_like(like, Rational(1));
}

} // namespace puiseux
