#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "puiseux/rational.hpp"
#include "puiseux/variables.hpp"

namespace puiseux {

using ExpVec = std::vector<long>;

inline long total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0L); }

/// Graded-lexicographic order over the registry order: total degree first,
/// ties broken lexicographically with earlier registry variables dominating.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial over a coefficient field K (Rational,
/// RationalFunction, or — when used as a plain ring — MultiPoly<Rational>).
/// No zero coefficients are ever stored; exponent vectors have the registry's
/// length.
template <typename K>
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, K, GrlexLess>;

    explicit MultiPoly(VarRegistry::Ptr reg) : reg_(std::move(reg)) {
        if (!reg_) fail(Errc::usage, "null registry");
    }

    static MultiPoly zero(VarRegistry::Ptr reg) { return MultiPoly(std::move(reg)); }

    static MultiPoly constant(VarRegistry::Ptr reg, K c) {
        MultiPoly p(std::move(reg));
        if (!is_zero(c)) p.terms_.emplace(ExpVec(p.reg_->size(), 0), std::move(c));
        return p;
    }

    static MultiPoly variable(VarRegistry::Ptr reg, size_t idx, const K& one) {
        MultiPoly p(reg);
        if (idx >= reg->size()) fail(Errc::usage, "variable index out of range");
        ExpVec e(reg->size(), 0);
        e[idx] = 1;
        p.terms_.emplace(std::move(e), one);
        return p;
    }

    static MultiPoly monomial(VarRegistry::Ptr reg, ExpVec e, K c) {
        MultiPoly p(std::move(reg));
        if (e.size() != p.reg_->size()) fail(Errc::usage, "exponent vector length mismatch");
        for (long x : e)
            if (x < 0) fail(Errc::usage, "negative exponent");
        if (!is_zero(c)) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    const VarRegistry::Ptr& reg() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    long degree() const { // total degree; -1 for zero
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    long degree_in(size_t v) const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    K coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        if (it != terms_.end()) return it->second;
        return zero_coeff();
    }

    /// Coefficient prototype for constructing constants of K in this context.
    K zero_coeff() const {
        if (!terms_.empty()) return zero_like(terms_.begin()->second);
        return K{}; // K must be default-constructible to zero when poly is empty
    }

    void add_term(const ExpVec& e, const K& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(reg_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_registry(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_registry(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_registry(b);
        MultiPoly r(a.reg_);
        ExpVec e(a.reg_->size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scaled(const K& c) const {
        MultiPoly r(reg_);
        if (is_zero(c)) return r;
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }

    MultiPoly pow(long n) const {
        if (n < 0) fail(Errc::usage, "negative polynomial power");
        MultiPoly r = constant_one();
        MultiPoly base = *this;
        unsigned long k = static_cast<unsigned long>(n);
        while (k) {
            if (k & 1) r *= base;
            if (k >>= 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.reg_ != b.reg_) {
            if (a.reg_->vars() != b.reg_->vars()) return false;
        }
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin();
        auto jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// View as univariate in variable v: index k holds the coefficient
    /// polynomial of v^k (with v's exponent cleared).
    std::vector<MultiPoly> coeffs_in(size_t v) const {
        long d = degree_in(v);
        std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, -1L) + 1), MultiPoly(reg_));
        for (const auto& [e, c] : terms_) {
            ExpVec f = e;
            long k = f[v];
            f[v] = 0;
            out[static_cast<size_t>(k)].add_term(f, c);
        }
        return out;
    }

    static MultiPoly from_coeffs_in(VarRegistry::Ptr reg, size_t v, const std::vector<MultiPoly>& cs) {
        MultiPoly r(reg);
        for (size_t k = 0; k < cs.size(); ++k) {
            for (const auto& [e, c] : cs[k].terms_) {
                ExpVec f = e;
                f[v] += static_cast<long>(k);
                r.add_term(f, c);
            }
        }
        return r;
    }

    /// Substitute a polynomial for variable v (same registry).
    MultiPoly substitute(size_t v, const MultiPoly& value) const {
        auto cs = coeffs_in(v);
        MultiPoly r(reg_);
        // Horner in v
        for (size_t k = cs.size(); k-- > 0;) {
            r = r * value + cs[k];
        }
        return r;
    }

    /// Map this polynomial into another registry by matching descriptors.
    /// A used variable missing from the target registry is an error.
    MultiPoly transport(VarRegistry::Ptr target) const {
        std::vector<std::optional<size_t>> where(reg_->size());
        for (size_t k = 0; k < reg_->size(); ++k) where[k] = target->index_of(reg_->var(k));
        MultiPoly r(target);
        for (const auto& [e, c] : terms_) {
            ExpVec f(target->size(), 0);
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!where[k])
                    fail(Errc::registry_mismatch,
                         "variable " + reg_->var(k).name() + " not present in target registry");
                f[*where[k]] += e[k];
            }
            r.add_term(f, c);
        }
        return r;
    }

    /// Full evaluation; Convert maps K to the scalar type S, point gives one
    /// S value per registry variable.
    template <typename S, typename Convert>
    S evaluate(const std::vector<S>& point, Convert conv, const S& zero) const {
        if (point.size() != reg_->size()) fail(Errc::usage, "evaluation point size mismatch");
        S acc = zero;
        for (const auto& [e, c] : terms_) {
            S t = conv(c);
            for (size_t k = 0; k < e.size(); ++k)
                for (long r = 0; r < e[k]; ++r) t = t * point[k];
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const;

private:
    MultiPoly constant_one() const {
        // one_like needs a sample coefficient; an all-zero polynomial can only
        // arise for default-constructible K (Rational), where K{1}... is fine.
        if (!terms_.empty()) return constant(reg_, one_like(terms_.begin()->second));
        return constant(reg_, unit_coeff());
    }

    K unit_coeff() const {
        if (!terms_.empty()) return one_like(terms_.begin()->second);
        if constexpr (std::is_constructible_v<K, long>) return K(1);
        else fail(Errc::internal, "cannot synthesize unit coefficient for empty polynomial");
    }

    void check_same_registry(const MultiPoly& o) const {
        if (reg_ == o.reg_) return;
        if (reg_->vars() != o.reg_->vars())
            fail(Errc::registry_mismatch, "operation on polynomials over different registries");
    }

    VarRegistry::Ptr reg_;
    TermMap terms_;
};

template <typename K>
inline bool is_zero(const MultiPoly<K>& p) { return p.is_zero_poly(); }

template <typename K>
inline MultiPoly<K> zero_like(const MultiPoly<K>& like) { return MultiPoly<K>::zero(like.reg()); }

inline MultiPoly<Rational> constant_like(const MultiPoly<Rational>& like, const Rational& v) {
    return MultiPoly<Rational>::constant(like.reg(), v);
}

inline MultiPoly<Rational> one_like(const MultiPoly<Rational>& like) {
    return constant_like(like, Rational(1));
}

/// Canonical text: terms in descending graded-lex order, each "coef*V^e*..."
/// with the coefficient always present ("p" or "p/q"); zero prints "0".
template <typename K>
std::string MultiPoly<K>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if constexpr (std::is_same_v<K, Rational>) {
            os << it->second.str();
        } else {
            os << "(" << it->second.str() << ")";
        }
        for (size_t k = 0; k < it->first.size(); ++k) {
            if (it->first[k] == 0) continue;
            os << "*" << reg_->var(k).name();
            if (it->first[k] != 1) os << "^" << it->first[k];
        }
    }
    return os.str();
}

} // namespace puiseux
