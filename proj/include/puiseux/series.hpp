#pragma once

#include <vector>

#include "puiseux/multipoly.hpp"

namespace puiseux {

enum class SeriesVar { T, X };

inline char series_var_tag(SeriesVar v) { return v == SeriesVar::T ? 'T' : 'X'; }

/// Power series in one structural variable, known modulo T^{P+1}. Arithmetic
/// propagates precision by the strict min rule; no silent extension.
template <typename K>
class TruncatedSeries {
public:
    TruncatedSeries(SeriesVar tag, long prec, K zero)
        : tag_(tag), prec_(prec), zero_(std::move(zero)) {
        if (prec_ < 0) fail(Errc::usage, "negative series precision");
        c_.assign(static_cast<size_t>(prec_) + 1, zero_);
    }

    static TruncatedSeries constant(SeriesVar tag, long prec, const K& value) {
        TruncatedSeries s(tag, prec, zero_like(value));
        s.set(0, value);
        return s;
    }

    SeriesVar tag() const { return tag_; }
    long prec() const { return prec_; }
    const K& zero_element() const { return zero_; }

    const K& at(long i) const {
        if (i < 0 || i > prec_) fail(Errc::usage, "series index beyond precision");
        return c_[static_cast<size_t>(i)];
    }

    void set(long i, K v) {
        if (i < 0 || i > prec_) fail(Errc::usage, "series index beyond precision");
        c_[static_cast<size_t>(i)] = std::move(v);
    }

    void add_to(long i, const K& v) {
        if (i < 0 || i > prec_) fail(Errc::usage, "series index beyond precision");
        c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] + v;
    }

    bool is_zero_series() const {
        for (const auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    /// Order of the first nonzero coefficient, or prec()+1 when the series
    /// vanishes to precision.
    long order() const {
        for (long i = 0; i <= prec_; ++i)
            if (!is_zero(c_[static_cast<size_t>(i)])) return i;
        return prec_ + 1;
    }

    TruncatedSeries truncated(long new_prec) const {
        if (new_prec > prec_) fail(Errc::usage, "cannot extend series precision");
        TruncatedSeries r(tag_, new_prec, zero_);
        for (long i = 0; i <= new_prec; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(tag_, prec_, zero_);
        for (long i = 0; i <= prec_; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_tag(b);
        long p = std::min(a.prec_, b.prec_);
        TruncatedSeries r(a.tag_, p, a.zero_);
        for (long i = 0; i <= p; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_tag(b);
        long p = std::min(a.prec_, b.prec_);
        TruncatedSeries r(a.tag_, p, a.zero_);
        for (long i = 0; i <= p; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_tag(b);
        long p = std::min(a.prec_, b.prec_);
        TruncatedSeries r(a.tag_, p, a.zero_);
        for (long i = 0; i <= p; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (long j = 0; i + j <= p; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries scaled(const K& k) const {
        TruncatedSeries r(tag_, prec_, zero_);
        for (long i = 0; i <= prec_; ++i) r.c_[i] = c_[i] * k;
        return r;
    }

    TruncatedSeries scaled_rational(const Rational& q) const {
        return scaled(constant_like(zero_, q));
    }

    /// Multiplication by the variable to the k-th power; the known window
    /// genuinely shifts, so precision grows by k.
    TruncatedSeries shifted_up(long k) const {
        if (k < 0) fail(Errc::usage, "negative shift");
        TruncatedSeries r(tag_, prec_ + k, zero_);
        for (long i = 0; i <= prec_; ++i) r.c_[i + k] = c_[i];
        return r;
    }

    TruncatedSeries pow(long n) const {
        if (n < 0) fail(Errc::usage, "negative series power");
        TruncatedSeries r = constant(tag_, prec_, one_like(zero_));
        TruncatedSeries base = *this;
        unsigned long k = static_cast<unsigned long>(n);
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    /// Multiplicative inverse mod T^{P+1}; requires an invertible constant term.
    TruncatedSeries inverted() const {
        if (is_zero(c_[0])) fail(Errc::not_invertible, "series with zero constant term");
        TruncatedSeries r(tag_, prec_, zero_);
        K inv0 = one_like(zero_);
        if constexpr (std::is_same_v<K, Rational>) inv0 = c_[0].inverse();
        else inv0 = one_like(zero_) / c_[0];
        r.c_[0] = inv0;
        for (long i = 1; i <= prec_; ++i) {
            K acc = zero_;
            for (long j = 1; j <= i; ++j) acc = acc + c_[j] * r.c_[i - j];
            r.c_[i] = -(acc * inv0);
        }
        return r;
    }

    /// Substitute the variable by (new variable)^n, e.g. X -> T^n. All slots
    /// up to n*(P+1)-1 of the result are determined.
    TruncatedSeries substitute_power(long n, SeriesVar new_tag) const {
        if (n <= 0) fail(Errc::usage, "power substitution needs n >= 1");
        TruncatedSeries r(new_tag, n * (prec_ + 1) - 1, zero_);
        for (long i = 0; i <= prec_; ++i) r.c_[n * i] = c_[i];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.tag_ != b.tag_ || a.prec_ != b.prec_) return false;
        for (long i = 0; i <= a.prec_; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    template <typename S, typename Convert>
    std::vector<S> map_coeffs(Convert conv) const {
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(conv(v));
        return out;
    }

private:
    void check_tag(const TruncatedSeries& o) const {
        if (tag_ != o.tag_) fail(Errc::usage, "series variable mismatch");
    }

    SeriesVar tag_;
    long prec_;
    std::vector<K> c_;
    K zero_;
};

// Rational convenience constructors.
inline TruncatedSeries<Rational> rational_series(SeriesVar tag, long prec) {
    return TruncatedSeries<Rational>(tag, prec, Rational(0));
}

/// Monic-capable polynomial in Y over truncated series in X: holds
/// f = sum_j c_j(X) Y^j with a shared X-precision.
template <typename K>
class YSeriesPoly {
public:
    YSeriesPoly(long deg, long prec, K zero) : deg_(deg), zero_(std::move(zero)) {
        if (deg_ < 0) fail(Errc::usage, "negative Y-degree");
        c_.assign(static_cast<size_t>(deg_) + 1, TruncatedSeries<K>(SeriesVar::X, prec, zero_));
    }

    long y_degree() const { return deg_; }
    long prec() const { return c_.front().prec(); }
    const K& zero_element() const { return zero_; }

    const TruncatedSeries<K>& coeff(long j) const { return c_.at(static_cast<size_t>(j)); }
    void set_coeff(long j, TruncatedSeries<K> s) {
        if (s.tag() != SeriesVar::X || s.prec() != prec())
            fail(Errc::usage, "coefficient series precision/tag mismatch");
        c_.at(static_cast<size_t>(j)) = std::move(s);
    }

    bool is_monic() const {
        const auto& top = c_.back();
        if (!(top.at(0) == one_like(zero_))) return false;
        for (long i = 1; i <= top.prec(); ++i)
            if (!is_zero(top.at(i))) return false;
        return true;
    }

    bool is_weierstrass() const {
        if (!is_monic()) return false;
        for (long j = 0; j < deg_; ++j)
            if (!is_zero(c_[static_cast<size_t>(j)].at(0))) return false;
        return true;
    }

    /// Actual top Y-degree with a nonzero stored coefficient (-1 for zero).
    long effective_degree() const {
        for (long j = deg_; j >= 0; --j)
            if (!c_[static_cast<size_t>(j)].is_zero_series()) return j;
        return -1;
    }

    friend YSeriesPoly operator*(const YSeriesPoly& a, const YSeriesPoly& b) {
        long p = std::min(a.prec(), b.prec());
        YSeriesPoly r(a.deg_ + b.deg_, p, a.zero_);
        for (long i = 0; i <= a.deg_; ++i) {
            if (a.c_[i].is_zero_series()) continue;
            auto ai = a.c_[i].truncated(p);
            for (long j = 0; j <= b.deg_; ++j) {
                if (b.c_[j].is_zero_series()) continue;
                r.c_[i + j] = r.c_[i + j] + ai * b.c_[j].truncated(p);
            }
        }
        return r;
    }

    friend YSeriesPoly operator-(const YSeriesPoly& a, const YSeriesPoly& b) {
        long p = std::min(a.prec(), b.prec());
        long d = std::max(a.deg_, b.deg_);
        YSeriesPoly r(d, p, a.zero_);
        for (long j = 0; j <= d; ++j) {
            if (j <= a.deg_) r.c_[j] = r.c_[j] + a.c_[j].truncated(p);
            if (j <= b.deg_) r.c_[j] = r.c_[j] - b.c_[j].truncated(p);
        }
        return r;
    }

    friend YSeriesPoly operator+(const YSeriesPoly& a, const YSeriesPoly& b) {
        long p = std::min(a.prec(), b.prec());
        long d = std::max(a.deg_, b.deg_);
        YSeriesPoly r(d, p, a.zero_);
        for (long j = 0; j <= d; ++j) {
            if (j <= a.deg_) r.c_[j] = r.c_[j] + a.c_[j].truncated(p);
            if (j <= b.deg_) r.c_[j] = r.c_[j] + b.c_[j].truncated(p);
        }
        return r;
    }

    YSeriesPoly pow(long n) const {
        if (n < 0) fail(Errc::usage, "negative power");
        YSeriesPoly r(0, prec(), zero_);
        r.c_[0] = TruncatedSeries<K>::constant(SeriesVar::X, prec(), one_like(zero_));
        YSeriesPoly base = *this;
        unsigned long k = static_cast<unsigned long>(n);
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    friend bool operator==(const YSeriesPoly& a, const YSeriesPoly& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }

    /// Bivariate polynomial view over a registry holding (x first, y second).
    MultiPoly<K> to_multipoly(const VarRegistry::Ptr& reg) const {
        MultiPoly<K> r(reg);
        ExpVec e(reg->size(), 0);
        for (long j = 0; j <= deg_; ++j) {
            for (long i = 0; i <= prec(); ++i) {
                const K& v = c_[static_cast<size_t>(j)].at(i);
                if (is_zero(v)) continue;
                e[0] = i;
                e[1] = j;
                r.add_term(e, v);
            }
        }
        return r;
    }

    static YSeriesPoly from_multipoly(const MultiPoly<K>& p, long prec, const K& zero) {
        long d = std::max(p.degree_in(1), 0L);
        YSeriesPoly r(d, prec, zero);
        for (const auto& [e, c] : p.terms()) {
            for (size_t k = 2; k < e.size(); ++k)
                if (e[k] != 0) fail(Errc::usage, "polynomial is not bivariate in (x, y)");
            if (e[0] > prec)
                fail(Errc::usage, "x-degree exceeds requested series precision");
            r.c_[static_cast<size_t>(e[1])].set(e[0], c);
        }
        return r;
    }

private:
    long deg_;
    std::vector<TruncatedSeries<K>> c_;
    K zero_;
};

/// f(T^n, alpha(T)) truncated by the strict min rule: the X-precision window
/// of f covers T-exponents below n*(P_f+1).
template <typename K>
TruncatedSeries<K> substitute_series(const YSeriesPoly<K>& f, long n, const TruncatedSeries<K>& alpha) {
    if (n <= 0) fail(Errc::usage, "substitute_series needs n >= 1");
    if (alpha.tag() != SeriesVar::T) fail(Errc::usage, "substitution series must be in T");
    if (!is_zero(alpha.at(0))) fail(Errc::usage, "substitution series must have zero constant term");
    long p = std::min(alpha.prec(), n * (f.prec() + 1) - 1);
    auto alpha_t = alpha.truncated(p);
    TruncatedSeries<K> acc(SeriesVar::T, p, f.zero_element());
    for (long j = f.y_degree(); j >= 0; --j) {
        acc = acc * alpha_t;
        acc = acc + f.coeff(j).substitute_power(n, SeriesVar::T).truncated(p);
    }
    return acc;
}

} // namespace puiseux
