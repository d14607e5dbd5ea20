#pragma once

#include <complex>
#include <map>
#include <random>
#include <vector>

#include "puiseux/branch.hpp"
#include "puiseux/grading.hpp"
#include "puiseux/rational_function.hpp"

namespace th {

using namespace puiseux;

inline Rational rnd_rational(std::mt19937& rng, long maxabs = 9, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-maxabs, maxabs);
    std::uniform_int_distribution<long> den(1, maxabs);
    while (true) {
        Rational r(num(rng), den(rng));
        if (allow_zero || !r.is_zero()) return r;
    }
}

inline long rnd_int(std::mt19937& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::complex<double> to_c(const Rational& r) { return {r.to_double(), 0.0}; }

/// Brute-force complex oracle for the Puiseux -> Weierstrass conversion:
/// expand prod_{eps in U_n} (Y - alpha(eps T)) with truncated complex series
/// arithmetic. Returns c[j][k] = coefficient of Y^j T^k.
inline std::vector<std::vector<std::complex<double>>> weierstrass_brute_force(
    long n, const std::map<long, Rational>& coeffs, long P) {
    using C = std::complex<double>;
    const double pi = 3.14159265358979323846;
    // series for each conjugate alpha(eps^k T)
    std::vector<std::vector<C>> conj(n, std::vector<C>(P + 1, C(0)));
    for (long k = 0; k < n; ++k)
        for (const auto& [i, a] : coeffs) {
            if (i > P) continue;
            C eps = std::polar(1.0, 2.0 * pi * k * i / n);
            conj[k][i] = eps * to_c(a);
        }
    // product over (Y - alpha_k), coefficients are T-series
    std::vector<std::vector<C>> f{std::vector<C>(P + 1, C(0))};
    f[0][0] = C(1); // degree-0 poly "1"
    for (long k = 0; k < n; ++k) {
        std::vector<std::vector<C>> nf(f.size() + 1, std::vector<C>(P + 1, C(0)));
        for (size_t j = 0; j < f.size(); ++j) {
            for (long a = 0; a <= P; ++a) {
                if (f[j][a] == C(0)) continue;
                nf[j + 1][a] += f[j][a]; // * Y
                for (long bq = 0; a + bq <= P; ++bq) nf[j][a + bq] -= f[j][a] * conj[k][bq];
            }
        }
        f = std::move(nf);
    }
    return f;
}

inline VarRegistry::Ptr xyreg() { return make_xy_registry('X'); }

inline MultiPoly<Rational> mono(const VarRegistry::Ptr& reg, long i, long j, Rational c) {
    return MultiPoly<Rational>::monomial(reg, ExpVec{i, j}, c);
}

/// Random quasi-homogeneous polynomial of the given weight, monic in y when
/// the weight admits the pure y-power (requires w.a >= 1).
inline MultiPoly<Rational> rnd_quasi_homog(std::mt19937& rng, const VarRegistry::Ptr& reg, Weight w,
                                           long weight_value, bool monic_y, long maxcoef = 5) {
    MultiPoly<Rational> p(reg);
    for (long j = weight_value / std::max(w.b, 1L); j >= 0; --j) {
        long rem = weight_value - w.b * j;
        if (rem < 0 || rem % w.a != 0) continue;
        long i = rem / w.a;
        Rational c = rnd_rational(rng, maxcoef);
        p.add_term(ExpVec{i, j}, c);
    }
    if (monic_y) {
        if (weight_value % w.b != 0) fail(Errc::usage, "weight does not admit a monic y-power");
        long d = weight_value / w.b;
        p.add_term(ExpVec{0, d}, Rational(1) - p.coefficient(ExpVec{0, d}));
    }
    return p;
}

} // namespace th
