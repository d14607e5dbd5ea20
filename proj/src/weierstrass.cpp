#include "puiseux/weierstrass.hpp"

namespace puiseux {

BivariateSeries::BivariateSeries(MultiPoly<Rational> p, long precision) : poly(p.reg()), prec(precision) {
    if (precision < 0) fail(Errc::usage, "negative series precision");
    if (p.reg()->size() != 2) fail(Errc::usage, "bivariate series needs a two-variable registry");
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] <= prec) poly.add_term(e, c);
    }
}

BivariateSeries BivariateSeries::truncated(long new_prec) const {
    if (new_prec > prec) fail(Errc::usage, "cannot extend series precision");
    return BivariateSeries(poly, new_prec);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    return BivariateSeries(a.poly * b.poly, std::min(a.prec, b.prec));
}
BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    return BivariateSeries(a.poly + b.poly, std::min(a.prec, b.prec));
}
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    return BivariateSeries(a.poly - b.poly, std::min(a.prec, b.prec));
}

Rational BivariateSeries::coeff(long i, long j) const {
    return poly.coefficient(ExpVec{i, j});
}

YSeriesPoly<Rational> PreparedFactorization::w_y_series() const {
    long shared = std::max(w.prec - std::max(m - 1, 0L), 0L);
    YSeriesPoly<Rational> out(m, shared, Rational(0));
    for (const auto& [e, c] : w.poly.terms()) {
        if (e[0] <= shared) {
            auto s = out.coeff(e[1]);
            s.add_to(e[0], c);
            out.set_coeff(e[1], s);
        }
    }
    return out;
}

std::pair<long, Rational> y_regularity(const BivariateSeries& f) {
    for (long j = 0; j <= f.prec; ++j) {
        Rational c = f.coeff(0, j);
        if (!c.is_zero()) return {j, c};
    }
    fail(Errc::not_y_regular, "f(0, Y) vanishes to precision");
}

namespace {

// Dense Y-coefficient rows: row[k][j] = coefficient of X^k Y^j.
using YRow = std::vector<Rational>;

YRow mul_trunc(const YRow& a, const YRow& b, long ycap) {
    YRow r(static_cast<size_t>(ycap) + 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(ycap); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

} // namespace

PreparedFactorization weierstrass_prepare(const BivariateSeries& f) {
    auto [m, c0m] = y_regularity(f);
    if (!c0m.is_one())
        fail(Errc::not_normalized, "weierstrass_prepare requires c_{0m} = 1 (divide f by c_{0m} first)");
    const long P = f.prec;
    const long ycap = P;

    // rows of f by X-degree
    std::vector<YRow> frow(static_cast<size_t>(P) + 1, YRow(static_cast<size_t>(ycap) + 1, Rational(0)));
    for (const auto& [e, c] : f.poly.terms()) frow[static_cast<size_t>(e[0])][static_cast<size_t>(e[1])] = c;

    // v(Y) = f(0, Y) / Y^m, a unit with v(0) = 1; invert as a Y-series.
    YRow v(static_cast<size_t>(ycap) + 1, Rational(0));
    for (long j = m; j <= ycap; ++j) v[static_cast<size_t>(j - m)] = frow[0][static_cast<size_t>(j)];
    YRow vinv(static_cast<size_t>(ycap) + 1, Rational(0));
    vinv[0] = Rational(1);
    for (long i = 1; i <= ycap; ++i) {
        Rational acc(0);
        for (long j = 1; j <= i; ++j) acc += v[static_cast<size_t>(j)] * vinv[static_cast<size_t>(i - j)];
        vinv[static_cast<size_t>(i)] = -acc;
    }

    // order-by-order in X: u_k Y^m + v w_k = f_k - sum_{0<b<k} u_{k-b} w_b
    std::vector<YRow> urow{v}, wrow;
    wrow.emplace_back(static_cast<size_t>(ycap) + 1, Rational(0)); // w_0 = Y^m handled via shape
    for (long k = 1; k <= P; ++k) {
        YRow rk = frow[static_cast<size_t>(k)];
        for (long bidx = 1; bidx < k; ++bidx) {
            auto prod = mul_trunc(urow[static_cast<size_t>(k - bidx)], wrow[static_cast<size_t>(bidx)], ycap);
            for (size_t j = 0; j < rk.size(); ++j) rk[j] -= prod[j];
        }
        // w_k = (v^{-1} rk) mod Y^m; u_k = (rk - v w_k) / Y^m
        YRow t = mul_trunc(vinv, rk, ycap);
        YRow wk(static_cast<size_t>(ycap) + 1, Rational(0));
        for (long j = 0; j < m && j <= ycap; ++j) wk[static_cast<size_t>(j)] = t[static_cast<size_t>(j)];
        YRow vwk = mul_trunc(v, wk, ycap);
        YRow uk(static_cast<size_t>(ycap) + 1, Rational(0));
        for (long j = m; j <= ycap; ++j) {
            Rational num = rk[static_cast<size_t>(j)] - vwk[static_cast<size_t>(j)];
            uk[static_cast<size_t>(j - m)] = num;
        }
        for (long j = 0; j < m && j <= ycap; ++j) {
            if (!(rk[static_cast<size_t>(j)] == vwk[static_cast<size_t>(j)]))
                fail(Errc::internal, "weierstrass_prepare: solve residue below Y^m");
        }
        urow.push_back(std::move(uk));
        wrow.push_back(std::move(wk));
    }

    auto reg = f.reg();
    MultiPoly<Rational> upoly(reg), wpoly(reg);
    wpoly.add_term(ExpVec{0, m}, Rational(1));
    for (long k = 0; k <= P; ++k) {
        for (long j = 0; j <= ycap; ++j) {
            const Rational& uc = urow[static_cast<size_t>(k)][static_cast<size_t>(j)];
            if (!uc.is_zero() && k + j <= P) upoly.add_term(ExpVec{k, j}, uc);
            if (k >= 1) {
                const Rational& wc = wrow[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (!wc.is_zero() && k + j <= P) wpoly.add_term(ExpVec{k, j}, wc);
            }
        }
    }

    PreparedFactorization out{BivariateSeries(std::move(upoly), P), BivariateSeries(std::move(wpoly), P), m};
    return out;
}

YSeriesPoly<Rational> approximate_root(const YSeriesPoly<Rational>& f, long d) {
    long n = f.y_degree();
    if (d <= 0 || n % d != 0) fail(Errc::usage, "approximate_root needs d | n");
    if (!f.is_monic()) fail(Errc::usage, "approximate_root needs a monic polynomial");
    if (d == 1) return f;
    const long nd = n / d;
    const long prec = f.prec();

    YSeriesPoly<Rational> p(nd, prec, Rational(0));
    p.set_coeff(nd, TruncatedSeries<Rational>::constant(SeriesVar::X, prec, Rational(1)));

    Rational dinv = Rational(1, d);
    for (long j = n - 1; j >= n - nd; --j) {
        auto e = f - p.pow(d);
        if (e.effective_degree() < j) continue;
        auto adjust = e.coeff(j).scaled(dinv);
        long target = j - (n - nd);
        auto cur = p.coeff(target);
        p.set_coeff(target, cur + adjust);
    }
    if ((f - p.pow(d)).effective_degree() >= n - nd)
        fail(Errc::internal, "approximate_root failed the defining degree bound");
    return p;
}

} // namespace puiseux
