#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "puiseux/grading.hpp"
#include "puiseux/multipoly.hpp"

namespace puiseux {

template <typename R>
using Matrix = std::vector<std::vector<R>>;

namespace detail {

/// Division-free determinant over a commutative ring: Laplace expansion along
/// rows, memoized on the set of still-available columns.
template <typename R>
class DetMemo {
public:
    DetMemo(const Matrix<R>& m, const R& zero, const R& one) : m_(m), zero_(zero), one_(one) {
        n_ = m.size();
        if (n_ > 62) fail(Errc::usage, "determinant size too large");
    }

    R run() {
        if (n_ == 0) return one_;
        return go((uint64_t(1) << n_) - 1);
    }

private:
    R go(uint64_t mask) {
        size_t row = n_ - static_cast<size_t>(__builtin_popcountll(mask));
        if (row == n_) return one_;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        R acc = zero_;
        int sign = 1;
        for (size_t col = 0; col < n_; ++col) {
            if (!(mask & (uint64_t(1) << col))) continue;
            const R& entry = m_[row][col];
            if (!is_zero(entry)) {
                R sub = go(mask & ~(uint64_t(1) << col));
                R term = entry * sub;
                acc = (sign > 0) ? (acc + term) : (acc - term);
            }
            sign = -sign;
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    const Matrix<R>& m_;
    size_t n_;
    R zero_, one_;
    std::unordered_map<uint64_t, R> memo_;
};

} // namespace detail

template <typename R>
R det_ring(const Matrix<R>& m, const R& zero, const R& one) {
    for (const auto& row : m)
        if (row.size() != m.size()) fail(Errc::usage, "determinant of non-square matrix");
    detail::DetMemo<R> d(m, zero, one);
    return d.run();
}

/// Univariate polynomial coefficient list: index k holds the y^k coefficient.
/// Degrees are the caller's declaration (zero padding included).
template <typename R>
struct UniPoly {
    std::vector<R> c; // size deg+1
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool all_zero() const {
        for (const auto& v : c)
            if (!is_zero(v)) return false;
        return true;
    }
};

/// The Sylvester matrix with n shifted rows of g's coefficients (g of declared
/// degree m) above m shifted rows of h's (h of degree n), each row listing
/// coefficients from the leading one downwards.
template <typename R>
Matrix<R> sylvester_matrix(const UniPoly<R>& g, const UniPoly<R>& h, const R& zero) {
    long m = g.deg(), n = h.deg();
    if (m < 0 || n < 0) fail(Errc::usage, "sylvester matrix needs declared degrees >= 0");
    size_t N = static_cast<size_t>(m + n);
    Matrix<R> S(N, std::vector<R>(N, zero));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) S[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = g.c[static_cast<size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) S[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = h.c[static_cast<size_t>(n - k)];
    return S;
}

template <typename R>
R resultant(const UniPoly<R>& g, const UniPoly<R>& h, const R& zero, const R& one) {
    if (g.all_zero() && h.all_zero()) fail(Errc::usage, "resultant of two zero polynomials");
    auto S = sylvester_matrix(g, h, zero);
    return det_ring(S, zero, one);
}

template <typename R>
struct BezoutCofactors {
    UniPoly<R> a; // deg < n, multiplies g
    UniPoly<R> b; // deg < m, multiplies h
    R res;
};

/// Unique (a, b) with g*a + h*b = Res(g, h)*f and deg a < deg h, deg b < deg g,
/// computed through the adjugate row-vector identity: each output coefficient
/// is the determinant of the Sylvester matrix with one row replaced by f's
/// coefficient row. Division-free, so integer inputs give integer outputs.
template <typename R>
BezoutCofactors<R> bezout_cofactors(const UniPoly<R>& g, const UniPoly<R>& h, const UniPoly<R>& f,
                                    const R& zero, const R& one) {
    long m = g.deg(), n = h.deg();
    if (m < 0 || n < 0) fail(Errc::usage, "bezout_cofactors needs declared degrees >= 0");
    if (f.deg() > m + n - 1) fail(Errc::usage, "bezout_cofactors: deg f must be < deg g + deg h");
    size_t N = static_cast<size_t>(m + n);
    auto S = sylvester_matrix(g, h, zero);
    R res = det_ring(S, zero, one);

    // f row ordered (f_{m+n-1}, ..., f_0)
    std::vector<R> frow(N, zero);
    for (long k = 0; k <= f.deg(); ++k) frow[static_cast<size_t>(m + n - 1 - k)] = f.c[static_cast<size_t>(k)];

    // (a_{n-1},...,a_0,b_{m-1},...,b_0) = frow * adj(S); entry j is det(S with
    // row j replaced by frow).
    std::vector<R> sol;
    sol.reserve(N);
    for (size_t j = 0; j < N; ++j) {
        Matrix<R> Sj = S;
        Sj[j] = frow;
        sol.push_back(det_ring(Sj, zero, one));
    }

    BezoutCofactors<R> out{UniPoly<R>{std::vector<R>(static_cast<size_t>(std::max(n, 1L)), zero)},
                           UniPoly<R>{std::vector<R>(static_cast<size_t>(std::max(m, 1L)), zero)}, res};
    for (long k = 0; k < n; ++k) out.a.c[static_cast<size_t>(k)] = sol[static_cast<size_t>(n - 1 - k)];
    for (long k = 0; k < m; ++k) out.b.c[static_cast<size_t>(k)] = sol[static_cast<size_t>(n + m - 1 - k)];
    return out;
}

/// Specialize x := 1 and read off the y-coefficient list (length = declared
/// degree + 1; the declared degree is taken from the polynomial itself).
template <typename K>
UniPoly<K> specialize_x1(const MultiPoly<K>& p, XYVars xy, const K& zero) {
    long d = p.degree_in(xy.y);
    UniPoly<K> out{std::vector<K>(static_cast<size_t>(std::max(d, 0L)) + 1, zero)};
    for (const auto& [e, c] : p.terms()) out.c[static_cast<size_t>(e[xy.y])] = out.c[static_cast<size_t>(e[xy.y])] + c;
    return out;
}

namespace detail {

/// Plain univariate division by a monic divisor, over a ring.
template <typename R>
std::pair<UniPoly<R>, UniPoly<R>> unipoly_divide_monic(const UniPoly<R>& f, const UniPoly<R>& g,
                                                       const R& zero) {
    long m = g.deg();
    if (m < 0 || !(g.c.back() == one_like(g.c.back())))
        fail(Errc::usage, "unipoly division needs a monic divisor");
    std::vector<R> r = f.c;
    std::vector<R> q(static_cast<size_t>(std::max<long>(f.deg() - m + 1, 1)), zero);
    for (long d = f.deg(); d >= m; --d) {
        R lead = r[static_cast<size_t>(d)];
        if (is_zero(lead)) continue;
        q[static_cast<size_t>(d - m)] = lead;
        for (long k = 0; k <= m; ++k)
            r[static_cast<size_t>(d - m + k)] = r[static_cast<size_t>(d - m + k)] - lead * g.c[static_cast<size_t>(k)];
    }
    if (static_cast<long>(r.size()) > m) r.resize(static_cast<size_t>(std::max(m, 1L)), zero);
    return {UniPoly<R>{std::move(q)}, UniPoly<R>{std::move(r)}};
}

/// Rebuild the quasi-homogeneous polynomial of weight u whose x = 1
/// specialization has the given y-coefficients; needs a >= 1 so the
/// x-exponent of each term is determined by (u, y-degree).
template <typename K>
MultiPoly<K> rehomogenize(const std::vector<K>& ycoeffs, long u, Weight w, XYVars xy,
                          const VarRegistry::Ptr& reg) {
    if (w.a < 1) fail(Errc::unsupported_weight, "rehomogenization needs weight a >= 1");
    MultiPoly<K> out(reg);
    ExpVec e(reg->size(), 0);
    for (size_t j = 0; j < ycoeffs.size(); ++j) {
        if (is_zero(ycoeffs[j])) continue;
        long rem = u - w.b * static_cast<long>(j);
        if (rem < 0 || rem % w.a != 0)
            fail(Errc::internal, "graded solve produced a term with no valid x-exponent");
        e[xy.x] = rem / w.a;
        e[xy.y] = static_cast<long>(j);
        out.add_term(e, ycoeffs[j]);
    }
    return out;
}

} // namespace detail

template <typename K>
struct GradedBezoutSolution {
    MultiPoly<K> phi; // multiplies g, deg_y < deg_y h, weight t+i
    MultiPoly<K> psi; // multiplies h, deg_y < deg_y g, weight s+i
    K resultant_x1;
};

/// Graded Bezout solve: for quasi-homogeneous f of weight s+t+i with
/// deg_y f < deg_y(gh), produce the unique phi, psi with f = g*phi + h*psi and
/// the stated degree/weight bounds. Route: specialize x=1, Bezout cofactors,
/// divide by the resultant, reduce the g-cofactor mod h, rehomogenize.
template <typename K>
GradedBezoutSolution<K> graded_bezout_solve(const MultiPoly<K>& g, const MultiPoly<K>& h,
                                            const MultiPoly<K>& f, Weight w, XYVars xy = {}) {
    if (w.a < 1) fail(Errc::unsupported_weight, "graded_bezout_solve needs weight a >= 1");
    if (!is_monic_in_y(g, xy) || !is_monic_in_y(h, xy))
        fail(Errc::usage, "graded_bezout_solve needs divisors monic in y");
    long s = weight_of(g, w, xy);
    long t = weight_of(h, w, xy);
    K kzero = zero_like(g.terms().begin()->second);
    K kone = one_like(kzero);

    auto G = specialize_x1(g, xy, kzero);
    auto H = specialize_x1(h, xy, kzero);
    K R = resultant(G, H, kzero, kone);
    if (is_zero(R)) fail(Errc::not_coprime, "graded_bezout_solve: resultant vanishes at x=1");

    GradedBezoutSolution<K> out{MultiPoly<K>(f.reg()), MultiPoly<K>(f.reg()), R};
    if (f.is_zero_poly()) return out;

    long u = weight_of(f, w, xy);
    long i = u - s - t;
    if (i < 0) fail(Errc::usage, "graded_bezout_solve: f has weight below s+t");
    if (f.degree_in(xy.y) >= g.degree_in(xy.y) + h.degree_in(xy.y))
        fail(Errc::usage, "graded_bezout_solve: deg_y f must be < deg_y(gh)");

    auto F = specialize_x1(f, xy, kzero);
    auto bez = bezout_cofactors(G, H, F, kzero, kone);

    std::vector<K> phi1(bez.a.c), psi1(bez.b.c);
    for (auto& v : phi1) v = v / R;
    for (auto& v : psi1) v = v / R;

    // Reduce the g-cofactor modulo h (already below the bound after the
    // adjugate solve; kept for padded degree declarations).
    auto [q, r] = detail::unipoly_divide_monic(UniPoly<K>{phi1}, H, kzero);
    phi1 = r.c;
    if (!q.all_zero()) {
        // psi += q*g
        std::vector<K> extra(static_cast<size_t>(q.deg() + G.deg()) + 1, kzero);
        for (long x = 0; x <= q.deg(); ++x)
            for (long y = 0; y <= G.deg(); ++y)
                extra[static_cast<size_t>(x + y)] =
                    extra[static_cast<size_t>(x + y)] + q.c[static_cast<size_t>(x)] * G.c[static_cast<size_t>(y)];
        if (psi1.size() < extra.size()) psi1.resize(extra.size(), kzero);
        for (size_t k = 0; k < extra.size(); ++k) psi1[k] = psi1[k] + extra[k];
    }

    out.phi = detail::rehomogenize(phi1, t + i, w, xy, f.reg());
    out.psi = detail::rehomogenize(psi1, s + i, w, xy, f.reg());

    if (!(g * out.phi + h * out.psi == f))
        fail(Errc::internal, "graded_bezout_solve verification failed");
    return out;
}

} // namespace puiseux
