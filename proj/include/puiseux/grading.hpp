#pragma once

#include <map>

#include "puiseux/multipoly.hpp"

namespace puiseux {

/// Weight vector omega = (a, b): the weight of x^i y^j is a*i + b*j.
struct Weight {
    long a = 1;
    long b = 1;

    Weight(long a_, long b_) : a(a_), b(b_) {
        if (a < 0 || b < 0 || (a == 0 && b == 0))
            fail(Errc::unsupported_weight, "weight must be a nonzero nonnegative pair");
    }
};

/// The two registry indices playing the roles of x and y.
struct XYVars {
    size_t x = 0;
    size_t y = 1;
};

inline long monomial_weight(const ExpVec& e, Weight w, XYVars xy) {
    return w.a * e[xy.x] + w.b * e[xy.y];
}

template <typename K>
void require_bivariate(const MultiPoly<K>& p, XYVars xy) {
    for (const auto& [e, c] : p.terms())
        for (size_t k = 0; k < e.size(); ++k)
            if (k != xy.x && k != xy.y && e[k] != 0)
                fail(Errc::usage, "polynomial uses variables outside the graded pair");
}

template <typename K>
using GradedDecomposition = std::map<long, MultiPoly<K>>;

/// Partition of the terms of p by weight; each part is omega-homogeneous and
/// the parts sum back to p.
template <typename K>
GradedDecomposition<K> graded_components(const MultiPoly<K>& p, Weight w, XYVars xy = {}) {
    require_bivariate(p, xy);
    GradedDecomposition<K> out;
    for (const auto& [e, c] : p.terms()) {
        long t = monomial_weight(e, w, xy);
        auto it = out.find(t);
        if (it == out.end()) it = out.emplace(t, MultiPoly<K>(p.reg())).first;
        it->second.add_term(e, c);
    }
    return out;
}

template <typename K>
bool is_quasi_homogeneous(const MultiPoly<K>& p, Weight w, XYVars xy = {}) {
    bool first = true;
    long t0 = 0;
    for (const auto& [e, c] : p.terms()) {
        long t = monomial_weight(e, w, xy);
        if (first) { t0 = t; first = false; }
        else if (t != t0) return false;
    }
    return true;
}

/// Weight of a quasi-homogeneous polynomial (usage error otherwise).
template <typename K>
long weight_of(const MultiPoly<K>& p, Weight w, XYVars xy = {}) {
    if (p.is_zero_poly()) fail(Errc::zero_polynomial, "weight of zero polynomial");
    if (!is_quasi_homogeneous(p, w, xy)) fail(Errc::usage, "polynomial is not quasi-homogeneous");
    return monomial_weight(p.terms().begin()->first, w, xy);
}

/// Minimal-weight quasi-homogeneous part.
template <typename K>
MultiPoly<K> initial_form(const MultiPoly<K>& p, Weight w, XYVars xy = {}) {
    if (p.is_zero_poly()) fail(Errc::zero_polynomial, "initial form of zero polynomial");
    require_bivariate(p, xy);
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        long t = monomial_weight(e, w, xy);
        if (first || t < best) { best = t; first = false; }
    }
    MultiPoly<K> out(p.reg());
    for (const auto& [e, c] : p.terms())
        if (monomial_weight(e, w, xy) == best) out.add_term(e, c);
    return out;
}

/// Keep only the terms of weight <= cap.
template <typename K>
MultiPoly<K> truncate_by_weight(const MultiPoly<K>& p, Weight w, long cap, XYVars xy = {}) {
    MultiPoly<K> out(p.reg());
    for (const auto& [e, c] : p.terms())
        if (monomial_weight(e, w, xy) <= cap) out.add_term(e, c);
    return out;
}

/// True when the y^deg coefficient is the constant 1 (monic with respect to y).
template <typename K>
bool is_monic_in_y(const MultiPoly<K>& p, XYVars xy = {}) {
    long d = p.degree_in(xy.y);
    if (d < 0) return false;
    auto cs = p.coeffs_in(xy.y);
    const auto& lead = cs[static_cast<size_t>(d)];
    if (lead.term_count() != 1) return false;
    const auto& [e, c] = *lead.terms().begin();
    return total_degree(e) == 0 && c == one_like(c);
}

/// Weierstrass shape: monic in y and every term of lower y-degree carries a
/// positive x-exponent (so all non-leading coefficients vanish at x=0).
template <typename K>
bool is_weierstrass_poly(const MultiPoly<K>& p, XYVars xy = {}) {
    if (!is_monic_in_y(p, xy)) return false;
    long d = p.degree_in(xy.y);
    for (const auto& [e, c] : p.terms())
        if (e[xy.y] < d && e[xy.x] == 0) return false;
    return true;
}

/// Plain division by a polynomial monic in y (leading-term loop); works over
/// any coefficient ring since the only division is by the leading 1.
template <typename K>
std::pair<MultiPoly<K>, MultiPoly<K>> divide_monic_y(const MultiPoly<K>& f, const MultiPoly<K>& g,
                                                     XYVars xy = {}) {
    if (!is_monic_in_y(g, xy)) fail(Errc::usage, "divisor is not monic in y");
    long m = g.degree_in(xy.y);
    MultiPoly<K> q(f.reg());
    MultiPoly<K> r = f;
    while (!r.is_zero_poly() && r.degree_in(xy.y) >= m) {
        long d = r.degree_in(xy.y);
        // lt(r)/y^m: every top-y-degree term shifted down by m
        MultiPoly<K> step(f.reg());
        for (const auto& [e, c] : r.terms()) {
            if (e[xy.y] != d) continue;
            ExpVec s = e;
            s[xy.y] -= m;
            step.add_term(s, c);
        }
        q += step;
        r -= step * g;
        if (!r.is_zero_poly() && r.degree_in(xy.y) >= d)
            fail(Errc::internal, "division failed to reduce y-degree");
    }
    return {q, r};
}

/// Quasi-homogeneous division with remainder: f = q*g + r with q*g, r of f's
/// weight and deg_y r < deg_y g.
template <typename K>
std::pair<MultiPoly<K>, MultiPoly<K>> quasihomogeneous_divide(const MultiPoly<K>& f,
                                                              const MultiPoly<K>& g, Weight w,
                                                              XYVars xy = {}) {
    if (!is_monic_in_y(g, xy)) fail(Errc::usage, "divisor is not monic in y");
    if (!f.is_zero_poly() && !is_quasi_homogeneous(f, w, xy))
        fail(Errc::usage, "dividend is not quasi-homogeneous");
    if (!is_quasi_homogeneous(g, w, xy)) fail(Errc::usage, "divisor is not quasi-homogeneous");
    return divide_monic_y(f, g, xy);
}

} // namespace puiseux
