#pragma once

#include <map>
#include <optional>
#include <set>

#include "puiseux/series.hpp"

namespace puiseux {

/// Characteristic sequence (b_0,...,b_m) with the derived e_k = gcd(b_0..b_k)
/// and n_k = e_{k-1}/e_k; e_0 > e_1 > ... > e_m = 1, b_1 < ... < b_m.
/// b_{m+1} is +infinity by convention (exposed as b_next(k)).
class Characteristic {
public:
    Characteristic() = default; // empty; build through from_sequence / characteristic_of
    static Characteristic from_sequence(std::vector<long> b);

    const std::vector<long>& b() const { return b_; }
    const std::vector<long>& e() const { return e_; }
    long n() const { return b_[0]; }
    long m() const { return static_cast<long>(b_.size()) - 1; }
    long nk(long k) const { // k in 1..m
        if (k < 1 || k > m()) fail(Errc::usage, "n_k index out of range");
        return e_[static_cast<size_t>(k - 1)] / e_[static_cast<size_t>(k)];
    }
    /// b_{k+1}, with the +infinity sentinel returned as nullopt.
    std::optional<long> b_next(long k) const {
        if (k + 1 <= m()) return b_[static_cast<size_t>(k + 1)];
        return std::nullopt;
    }

    /// Membership in I = e_0 N_+ ∪ ⋃_k e_k N ∩ [b_k, ∞).
    bool in_index_set(long i) const;
    std::vector<long> index_set_upto(long bound) const;

    friend bool operator==(const Characteristic& a, const Characteristic& b) { return a.b_ == b.b_; }
    friend bool operator!=(const Characteristic& a, const Characteristic& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<long> b_;
    std::vector<long> e_;
};

/// Characteristic of a parametrisation (t^n, alpha) from n and supp(alpha);
/// requires gcd({n} ∪ supp) = 1.
Characteristic characteristic_of(long n, const std::set<long>& supp);

/// A support yields this characteristic iff {b_1..b_m} ⊆ supp ⊆ I.
bool validate_support(const Characteristic& ch, const std::set<long>& supp);

/// Sum of eps^i over the n-th roots of unity: n when n | i, else 0.
long unity_power_sum(long n, long i);

/// Puiseux parametrisation (T^n, sum a_i T^i), truncated at T^P.
struct PuiseuxParam {
    long n = 1;
    std::map<long, Rational> coeffs; // i >= 1 only; zero values not stored
    long truncation = 0;

    std::set<long> support() const {
        std::set<long> s;
        for (const auto& [i, c] : coeffs)
            if (!c.is_zero()) s.insert(i);
        return s;
    }

    bool is_genuine() const; // gcd({n} ∪ supp) == 1
    void validate() const;   // field invariants (indices in [1, truncation], n >= 1)

    TruncatedSeries<Rational> alpha() const {
        auto s = rational_series(SeriesVar::T, truncation);
        for (const auto& [i, c] : coeffs) s.set(i, c);
        return s;
    }
};

/// The Puiseux -> Weierstrass engine, over any coefficient ring K that embeds
/// the rationals (K = Rational, or polynomials in the A-variables).
///
/// Roots of unity are never materialized: the power sums
/// p_k(T) = sum_{eps in U_n} alpha(eps T)^k keep exactly the exponents of
/// alpha^k divisible by n, scaled by n. Elementary symmetric functions then
/// follow by Newton's identities (the division by k <= n is always legal in
/// characteristic zero).
template <typename K>
YSeriesPoly<K> weierstrass_from_alpha(long n, const TruncatedSeries<K>& alpha) {
    if (n <= 0) fail(Errc::usage, "weierstrass_from_alpha needs n >= 1");
    if (alpha.tag() != SeriesVar::T) fail(Errc::usage, "alpha must be a series in T");
    if (!is_zero(alpha.at(0))) fail(Errc::usage, "alpha must have zero constant term");
    const K kzero = alpha.zero_element();
    const long P = alpha.prec();
    const long Px = P / n; // X-precision: entries (i, j) exact iff n*i <= P

    // power sums as series in X
    std::vector<TruncatedSeries<K>> psums; // psums[k-1] = p_k
    TruncatedSeries<K> apow = alpha;
    for (long k = 1; k <= n; ++k) {
        if (k > 1) apow = apow * alpha;
        TruncatedSeries<K> pk(SeriesVar::X, Px, kzero);
        for (long i = 0; i <= Px; ++i)
            pk.set(i, apow.at(n * i) * constant_like(kzero, Rational(n)));
        psums.push_back(std::move(pk));
    }

    // Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    std::vector<TruncatedSeries<K>> esym;
    esym.push_back(TruncatedSeries<K>::constant(SeriesVar::X, Px, one_like(kzero)));
    for (long k = 1; k <= n; ++k) {
        TruncatedSeries<K> acc(SeriesVar::X, Px, kzero);
        for (long i = 1; i <= k; ++i) {
            auto term = esym[static_cast<size_t>(k - i)] * psums[static_cast<size_t>(i - 1)];
            if (i % 2 == 0) term = -term;
            acc = acc + term;
        }
        esym.push_back(acc.scaled_rational(Rational(1, k)));
    }

    // f(X, Y) = sum_k (-1)^k e_k Y^{n-k}
    YSeriesPoly<K> f(n, Px, kzero);
    for (long k = 0; k <= n; ++k) {
        auto ek = esym[static_cast<size_t>(k)];
        if (k % 2 == 1) ek = -ek;
        f.set_coeff(n - k, std::move(ek));
    }
    return f;
}

/// Concrete conversion for a rational parametrisation.
YSeriesPoly<Rational> weierstrass_from_puiseux(const PuiseuxParam& p);

/// Symbolic Weierstrass coefficients F_{ij} in the A-variables: the literal
/// coefficients C_{ij} of f* = sum C_{ij} X^i Y^j (for Y^n - sum c_k X^k they equal
/// -entry(k, 0)).
struct SymbolicWeierstrassCoeffs {
    Characteristic ch;
    long truncation = 0;
    std::set<long> support; // A-variable indices in use
    VarRegistry::Ptr areg;  // A_i for i in support, ascending
    std::map<std::pair<long, long>, MultiPoly<Rational>> entries; // nonzero entries only

    long n() const { return ch.n(); }
    bool entry_exact(long i, long j) const { return j <= n() && n() * i <= truncation; }
    MultiPoly<Rational> entry(long i, long j) const {
        if (!entry_exact(i, j)) fail(Errc::insufficient_truncation, "entry outside exactness window");
        auto it = entries.find({i, j});
        if (it != entries.end()) return it->second;
        return MultiPoly<Rational>::zero(areg);
    }
};

/// Run the engine with polynomial coefficients over A_i, i in the support
/// (default: all of I ∩ [1, P]). Requires P >= b_m.
SymbolicWeierstrassCoeffs symbolic_weierstrass_coeffs(const Characteristic& ch, long P,
                                                      std::optional<std::set<long>> support = {});

struct VerifyReport {
    bool vanishes = false; // true when the residual is 0 to precision
    long order = 0;        // order of vanishing; precision+1 when vanishes
    long precision = 0;    // T-precision of the residual
};

/// T-order of f(T^n, alpha(T)); order >= precision+1 certifies vanishing.
VerifyReport verify_parametrisation(const YSeriesPoly<Rational>& f, const PuiseuxParam& p);

/// Ascending A-variable registry for a support set.
VarRegistry::Ptr make_a_registry(const std::set<long>& support);

} // namespace puiseux
