#include "puiseux/branch.hpp"

#include <numeric>
#include <sstream>

namespace puiseux {

Characteristic Characteristic::from_sequence(std::vector<long> b) {
    if (b.empty()) fail(Errc::usage, "empty characteristic sequence");
    for (long v : b)
        if (v <= 0) fail(Errc::usage, "characteristic entries must be positive");
    Characteristic ch;
    ch.b_ = std::move(b);
    ch.e_.resize(ch.b_.size());
    long g = 0;
    for (size_t k = 0; k < ch.b_.size(); ++k) {
        g = std::gcd(g, ch.b_[k]);
        ch.e_[k] = g;
    }
    for (size_t k = 1; k < ch.b_.size(); ++k) {
        if (ch.e_[k] >= ch.e_[k - 1])
            fail(Errc::usage, "characteristic must have strictly decreasing gcd chain");
        if (k >= 2 && ch.b_[k] <= ch.b_[k - 1])
            fail(Errc::usage, "characteristic exponents b_1 < ... < b_m required");
    }
    if (ch.e_.back() != 1) fail(Errc::not_primitive, "characteristic gcd chain must end at 1");
    return ch;
}

bool Characteristic::in_index_set(long i) const {
    if (i <= 0) return false;
    if (i % e_[0] == 0) return true; // e_0 N_+
    for (long k = 1; k <= m(); ++k)
        if (i >= b_[static_cast<size_t>(k)] && i % e_[static_cast<size_t>(k)] == 0) return true;
    return false;
}

std::vector<long> Characteristic::index_set_upto(long bound) const {
    if (bound < 1) fail(Errc::usage, "index_set bound must be >= 1");
    std::vector<long> out;
    for (long i = 1; i <= bound; ++i)
        if (in_index_set(i)) out.push_back(i);
    return out;
}

std::string Characteristic::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < b_.size(); ++k) {
        if (k) os << ",";
        os << b_[k];
    }
    os << ")";
    return os.str();
}

Characteristic characteristic_of(long n, const std::set<long>& supp) {
    if (n <= 0) fail(Errc::usage, "characteristic_of needs n >= 1");
    long g = n;
    for (long i : supp) {
        if (i <= 0) fail(Errc::usage, "support indices must be positive");
        g = std::gcd(g, i);
    }
    if (g != 1) fail(Errc::not_primitive, "gcd({n} ∪ supp) must be 1");
    std::vector<long> b{n};
    long e = n;
    while (e > 1) {
        // b_{k+1} = min(supp \ e_k N)
        long next = -1;
        for (long i : supp) {
            if (i % e != 0) { next = i; break; }
        }
        if (next < 0) fail(Errc::internal, "gcd chain failed to reach 1");
        b.push_back(next);
        e = std::gcd(e, next);
    }
    return Characteristic::from_sequence(std::move(b));
}

bool validate_support(const Characteristic& ch, const std::set<long>& supp) {
    for (long k = 1; k <= ch.m(); ++k)
        if (!supp.count(ch.b()[static_cast<size_t>(k)])) return false;
    for (long i : supp)
        if (!ch.in_index_set(i)) return false;
    return true;
}

long unity_power_sum(long n, long i) {
    if (n < 1) fail(Errc::usage, "unity_power_sum needs n >= 1");
    long r = i % n;
    return r == 0 ? n : 0;
}

bool PuiseuxParam::is_genuine() const {
    long g = n;
    for (long i : support()) g = std::gcd(g, i);
    return g == 1;
}

void PuiseuxParam::validate() const {
    if (n < 1) fail(Errc::usage, "parametrisation needs n >= 1");
    if (truncation < 0) fail(Errc::usage, "negative truncation");
    for (const auto& [i, c] : coeffs) {
        if (i < 1) fail(Errc::usage, "parametrisation coefficients start at T^1");
        if (i > truncation) fail(Errc::usage, "coefficient index beyond truncation");
    }
}

YSeriesPoly<Rational> weierstrass_from_puiseux(const PuiseuxParam& p) {
    p.validate();
    if (!p.is_genuine()) fail(Errc::not_primitive, "gcd({n} ∪ supp) must be 1");
    return weierstrass_from_alpha(p.n, p.alpha());
}

VarRegistry::Ptr make_a_registry(const std::set<long>& support) {
    std::vector<VarDescriptor> vars;
    vars.reserve(support.size());
    for (long i : support) vars.push_back(VarDescriptor::A(i));
    return VarRegistry::make(std::move(vars));
}

SymbolicWeierstrassCoeffs symbolic_weierstrass_coeffs(const Characteristic& ch, long P,
                                                      std::optional<std::set<long>> support) {
    long bm = ch.b().back();
    if (P < bm) fail(Errc::insufficient_truncation, "truncation below b_m");
    std::set<long> supp;
    if (support) {
        supp = *support;
        if (!validate_support(ch, supp))
            fail(Errc::usage, "support incompatible with the characteristic");
        for (long i : supp)
            if (i > P) fail(Errc::usage, "support index beyond truncation");
    } else {
        for (long i : ch.index_set_upto(P)) supp.insert(i);
    }

    SymbolicWeierstrassCoeffs out;
    out.ch = ch;
    out.truncation = P;
    out.support = supp;
    out.areg = make_a_registry(supp);

    using PK = MultiPoly<Rational>;
    PK pzero = PK::zero(out.areg);
    TruncatedSeries<PK> alpha(SeriesVar::T, P, pzero);
    for (long i : supp) {
        alpha.set(i, PK::variable(out.areg, *out.areg->index_of(VarDescriptor::A(i)), Rational(1)));
    }
    auto f = weierstrass_from_alpha<PK>(ch.n(), alpha);
    for (long j = 0; j <= f.y_degree(); ++j)
        for (long i = 0; i <= f.prec(); ++i) {
            const auto& c = f.coeff(j).at(i);
            if (!c.is_zero_poly()) out.entries.emplace(std::make_pair(i, j), c);
        }
    return out;
}

VerifyReport verify_parametrisation(const YSeriesPoly<Rational>& f, const PuiseuxParam& p) {
    p.validate();
    auto resid = substitute_series(f, p.n, p.alpha());
    VerifyReport rep;
    rep.precision = resid.prec();
    rep.order = resid.order();
    rep.vanishes = rep.order > rep.precision;
    return rep;
}

} // namespace puiseux
