#include "puiseux/invariants.hpp"

#include "puiseux/resultants.hpp"

namespace puiseux {

long a_weight(const ExpVec& e, const VarRegistry& reg) {
    long w = 0;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        const auto& d = reg.var(k);
        if (d.kind == VarKind::A) w += d.i * e[k];
    }
    return w;
}

bool is_un_invariant(const MultiPoly<Rational>& q, long n) {
    if (n < 1) fail(Errc::usage, "is_un_invariant needs n >= 1");
    for (const auto& [e, c] : q.terms())
        if (a_weight(e, *q.reg()) % n != 0) return false;
    return true;
}

MultiPoly<Rational> symmetrize(const MultiPoly<Rational>& q, long n) {
    if (n < 1) fail(Errc::usage, "symmetrize needs n >= 1");
    auto reg = q.reg();
    using P = MultiPoly<Rational>;

    // residue classes of Q by A-weight mod n
    std::vector<P> parts(static_cast<size_t>(n), P::zero(reg));
    for (const auto& [e, c] : q.terms()) {
        long r = a_weight(e, *q.reg()) % n;
        parts[static_cast<size_t>(r)].add_term(e, c);
    }

    // multiplication-by-B matrix on the basis 1, z, ..., z^{n-1} mod z^n - 1
    Matrix<P> M(static_cast<size_t>(n), std::vector<P>(static_cast<size_t>(n), P::zero(reg)));
    for (long col = 0; col < n; ++col)
        for (long r = 0; r < n; ++r) M[static_cast<size_t>((col + r) % n)][static_cast<size_t>(col)] =
            parts[static_cast<size_t>(r)];

    return det_ring(M, P::zero(reg), P::constant(reg, Rational(1)));
}

} // namespace puiseux
