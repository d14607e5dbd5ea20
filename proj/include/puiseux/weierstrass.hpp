#pragma once

#include "puiseux/series.hpp"

namespace puiseux {

/// Bivariate power series in (X, Y) truncated by total order: all terms of
/// total degree <= prec are stored exactly, higher ones are unknown.
struct BivariateSeries {
    MultiPoly<Rational> poly;
    long prec = 0;

    BivariateSeries(MultiPoly<Rational> p, long precision);

    static BivariateSeries make(const VarRegistry::Ptr& reg, long precision) {
        return BivariateSeries(MultiPoly<Rational>::zero(reg), precision);
    }

    const VarRegistry::Ptr& reg() const { return poly.reg(); }

    BivariateSeries truncated(long new_prec) const;
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);

    Rational coeff(long i, long j) const;
    Rational at_origin() const { return coeff(0, 0); }
};

struct PreparedFactorization {
    BivariateSeries u; // unit, u(0,0) = 1
    BivariateSeries w; // Weierstrass polynomial of Y-degree m (total-order window)
    long m = 0;

    /// Weierstrass polynomial as a Y-series polynomial; only the slots inside
    /// the total-order window are meaningful, so the shared X-precision is the
    /// conservative prec - (m-1).
    YSeriesPoly<Rational> w_y_series() const;
};

/// Constructive Weierstrass preparation (order-by-order solve in total
/// X-degree). Preconditions: f(0,Y) = Y^m + higher with the Y^m coefficient
/// exactly 1; callers with c_{0m} = c != 1 divide by c first.
PreparedFactorization weierstrass_prepare(const BivariateSeries& f);

/// Y-order m of f(0, Y) together with its coefficient c_{0m}; NotYRegular when
/// f(0, Y) vanishes to precision.
std::pair<long, Rational> y_regularity(const BivariateSeries& f);

/// The d-th approximate root of a monic f of Y-degree n (d | n): the unique
/// monic p of degree n/d with deg_Y(f - p^d) < n - n/d, by Tschirnhausen
/// iteration (at most n/d correction steps).
YSeriesPoly<Rational> approximate_root(const YSeriesPoly<Rational>& f, long d);

} // namespace puiseux
