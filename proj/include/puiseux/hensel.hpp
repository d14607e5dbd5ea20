#pragma once

#include "puiseux/resultants.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

template <typename K>
struct LiftResult {
    MultiPoly<K> g, h;                                        // weight-truncated factors
    std::vector<std::pair<MultiPoly<K>, MultiPoly<K>>> levels; // (g_{s+i}, h_{t+i}), i = 1..excess
    K res_x1;                                                 // Res(G, H)|_{x=1}
    long s = 0, t = 0, excess = 0;
};

/// Effective Hensel lifting (graded): factor a Weierstrass polynomial f whose
/// weighted initial form splits as G*H into coprime Weierstrass factors,
/// order by order in weight up to s+t+excess. Works over any exact coefficient
/// field (rationals, or rational functions in the A-variables); the level-i
/// solve is graded_bezout_solve applied to
///   f_{s+t+i} - sum_{k+l=i, k,l<i} g_{s+k} h_{t+l}.
template <typename K>
LiftResult<K> hensel_lift(const MultiPoly<K>& f, Weight w, const MultiPoly<K>& G,
                          const MultiPoly<K>& H, long max_weight_excess, XYVars xy = {}) {
    if (max_weight_excess < 0) fail(Errc::usage, "negative weight excess");
    if (f.is_zero_poly()) fail(Errc::usage, "hensel_lift of zero polynomial");
    if (!is_weierstrass_poly(f, xy)) fail(Errc::usage, "hensel_lift: f is not Weierstrass");
    if (!is_weierstrass_poly(G, xy) || !is_weierstrass_poly(H, xy))
        fail(Errc::usage, "hensel_lift: seed factors must be Weierstrass");
    if (!is_quasi_homogeneous(G, w, xy) || !is_quasi_homogeneous(H, w, xy))
        fail(Errc::usage, "hensel_lift: seed factors must be quasi-homogeneous");

    long s = weight_of(G, w, xy);
    long t = weight_of(H, w, xy);

    auto inf = initial_form(f, w, xy);
    if (!(inf == G * H)) fail(Errc::bad_initial_form, "hensel_lift: in_w f != G*H");
    if (f.degree_in(xy.y) != inf.degree_in(xy.y))
        fail(Errc::not_y_regular, "hensel_lift: deg_y in_w f != deg_y f");

    K kzero = zero_like(f.terms().begin()->second);
    K kone = one_like(kzero);
    auto Gx = specialize_x1(G, xy, kzero);
    auto Hx = specialize_x1(H, xy, kzero);
    K R = resultant(Gx, Hx, kzero, kone);
    if (is_zero(R)) fail(Errc::not_coprime, "hensel_lift: seed factors are not coprime");

    auto pieces = graded_components(f, w, xy);

    LiftResult<K> out{G, H, {}, R, s, t, max_weight_excess};
    std::vector<MultiPoly<K>> gparts{G}, hparts{H};
    for (long i = 1; i <= max_weight_excess; ++i) {
        MultiPoly<K> rhs(f.reg());
        auto it = pieces.find(s + t + i);
        if (it != pieces.end()) rhs += it->second;
        for (long k = 1; k < i; ++k) rhs -= gparts[static_cast<size_t>(k)] * hparts[static_cast<size_t>(i - k)];

        MultiPoly<K> gi(f.reg()), hi(f.reg());
        if (!rhs.is_zero_poly()) {
            auto sol = graded_bezout_solve(G, H, rhs, w, xy);
            hi = sol.phi; // multiplies G
            gi = sol.psi; // multiplies H
        }
        gparts.push_back(gi);
        hparts.push_back(hi);
        out.g += gi;
        out.h += hi;
        out.levels.emplace_back(gi, hi);
    }
    return out;
}

/// YSeriesPoly front end: requires the series precision to cover every slot of
/// weight <= s+t+excess.
template <typename K>
LiftResult<K> hensel_lift(const YSeriesPoly<K>& f, Weight w, const MultiPoly<K>& G,
                          const MultiPoly<K>& H, long max_weight_excess, XYVars xy = {}) {
    if (!is_quasi_homogeneous(G, w, xy) || !is_quasi_homogeneous(H, w, xy))
        fail(Errc::usage, "hensel_lift: seed factors must be quasi-homogeneous");
    long s = weight_of(G, w, xy);
    long t = weight_of(H, w, xy);
    long cap = s + t + max_weight_excess;
    if (w.a >= 1 && f.prec() * w.a < cap)
        fail(Errc::insufficient_truncation,
             "series precision does not determine all slots up to the requested weight");
    auto fp = truncate_by_weight(f.to_multipoly(G.reg()), w, cap, xy);
    return hensel_lift(fp, w, G, H, max_weight_excess, xy);
}

/// Conservative shared-precision YSeriesPoly view of a weight-truncated
/// factor: every stored (x, y) slot within the returned precision is exact.
template <typename K>
YSeriesPoly<K> lift_factor_to_y_series(const MultiPoly<K>& factor, Weight w, long base_weight,
                                       long excess, const K& zero, XYVars xy = {}) {
    long d = factor.degree_in(xy.y);
    long cap = base_weight + excess;
    long prec = (cap - w.b * std::max(d - 1, 0L)) / std::max(w.a, 1L);
    prec = std::max(prec, 0L);
    YSeriesPoly<K> out(d, prec, zero);
    auto cs = factor.coeffs_in(xy.y);
    for (long j = 0; j <= d; ++j) {
        TruncatedSeries<K> series(SeriesVar::X, prec, zero);
        for (const auto& [e, c] : cs[static_cast<size_t>(j)].terms())
            if (e[xy.x] <= prec) series.add_to(e[xy.x], c);
        out.set_coeff(j, series);
    }
    return out;
}

} // namespace puiseux
