#include "puiseux/rewrite.hpp"

#include "puiseux/linsolve.hpp"

namespace puiseux {

namespace {

struct Cand {
    size_t reg_idx; // index in the solve registry
    long weight;    // A-weight of the image
    long adeg;      // A-degree of the image
    MultiPoly<Rational> image;
};

// Multisets of candidates hitting the exact (weight, degree) target with at
// most maxcount factors; nondecreasing candidate index, so each monomial is
// produced once. Integer bookkeeping only; images are expanded afterwards.
void enum_block(const std::vector<Cand>& cands, size_t start, long tw, long td, long budget_left,
                ExpVec& expo, std::vector<ExpVec>& out) {
    if (tw == 0 && td == 0) {
        out.push_back(expo);
        return;
    }
    if (tw <= 0 || td <= 0 || budget_left <= 0) return;
    for (size_t k = start; k < cands.size(); ++k) {
        const auto& c = cands[k];
        if (c.weight > tw || c.adeg > td) continue;
        expo[c.reg_idx] += 1;
        enum_block(cands, k, tw - c.weight, td - c.adeg, budget_left - 1, expo, out);
        expo[c.reg_idx] -= 1;
    }
}

// Solve sum_M x_M * M(F) = target with ansatz monomials of degree <= maxdeg
// over the solve registry. The target splits into independent bihomogeneous
// blocks because every candidate image is A-bihomogeneous.
std::optional<MultiPoly<Rational>> solve_for(const MultiPoly<Rational>& target,
                                             const std::vector<Cand>& cands,
                                             const VarRegistry::Ptr& solvereg, long maxdeg) {
    const auto& areg = *target.reg();
    std::map<std::pair<long, long>, MultiPoly<Rational>> comps;
    for (const auto& [e, c] : target.terms()) {
        auto key = std::make_pair(a_weight(e, areg), total_degree(e));
        auto it = comps.find(key);
        if (it == comps.end()) it = comps.emplace(key, MultiPoly<Rational>::zero(target.reg())).first;
        it->second.add_term(e, c);
    }

    // cached powers of the candidate images, shared across blocks
    std::map<std::pair<size_t, long>, MultiPoly<Rational>> power_cache;
    auto image_power = [&](size_t k, long e) -> const MultiPoly<Rational>& {
        auto it = power_cache.find({k, e});
        if (it == power_cache.end())
            it = power_cache.emplace(std::make_pair(k, e), cands[k].image.pow(e)).first;
        return it->second;
    };
    std::map<size_t, size_t> cand_of_reg; // reg_idx -> candidate index
    for (size_t k = 0; k < cands.size(); ++k) cand_of_reg[cands[k].reg_idx] = k;

    MultiPoly<Rational> out(solvereg);
    for (const auto& [key, comp] : comps) {
        auto [tw, td] = key;
        std::vector<ExpVec> monos;
        ExpVec expo(solvereg->size(), 0);
        enum_block(cands, 0, tw, td, maxdeg, expo, monos);
        if (monos.empty()) return std::nullopt;
        std::sort(monos.begin(), monos.end(), GrlexLess{});

        std::vector<std::pair<ExpVec, MultiPoly<Rational>>> cols;
        cols.reserve(monos.size());
        for (const auto& m : monos) {
            MultiPoly<Rational> img = MultiPoly<Rational>::constant(comp.reg(), Rational(1));
            for (size_t v = 0; v < m.size(); ++v)
                if (m[v] > 0) img *= image_power(cand_of_reg.at(v), m[v]);
            cols.emplace_back(m, std::move(img));
        }

        // fast reject: a target monomial that no column can produce
        {
            std::set<ExpVec, GrlexLess> covered;
            for (const auto& col : cols)
                for (const auto& [e, c] : col.second.terms()) covered.insert(e);
            for (const auto& [e, c] : comp.terms())
                if (!covered.count(e)) return std::nullopt;
        }

        std::map<ExpVec, size_t, GrlexLess> rowof;
        auto row_for = [&](const ExpVec& e) {
            auto it = rowof.find(e);
            if (it == rowof.end()) it = rowof.emplace(e, rowof.size()).first;
            return it->second;
        };
        for (const auto& [e, c] : comp.terms()) row_for(e);
        for (const auto& col : cols)
            for (const auto& [e, c] : col.second.terms()) row_for(e);

        std::vector<std::vector<Rational>> M(rowof.size(), std::vector<Rational>(cols.size(), Rational(0)));
        std::vector<Rational> rhs(rowof.size(), Rational(0));
        for (size_t k = 0; k < cols.size(); ++k)
            for (const auto& [e, c] : cols[k].second.terms()) M[row_for(e)][k] = c;
        for (const auto& [e, c] : comp.terms()) rhs[row_for(e)] = c;

        auto x = solve_exact(std::move(M), std::move(rhs));
        if (!x) return std::nullopt;
        for (size_t k = 0; k < cols.size(); ++k)
            if (!(*x)[k].is_zero()) out.add_term(cols[k].first, (*x)[k]);
    }
    return out;
}

// Exponent tuples over nvars variables, total degree ascending, then
// lexicographically descending in (l_1, ..., l_nvars).
void tuples_of_degree(long nvars, long d, long idx, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
    if (idx == nvars - 1 || nvars == 0) {
        if (nvars > 0) cur[static_cast<size_t>(idx)] = d;
        if (nvars > 0 || d == 0) out.push_back(cur);
        if (nvars > 0) cur[static_cast<size_t>(idx)] = 0;
        return;
    }
    for (long v = d; v >= 0; --v) {
        cur[static_cast<size_t>(idx)] = v;
        tuples_of_degree(nvars, d - v, idx + 1, cur, out);
        cur[static_cast<size_t>(idx)] = 0;
    }
}

std::vector<std::vector<long>> monomials_up_to(long nvars, long maxdeg) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<size_t>(std::max(nvars, 0L)), 0);
    for (long d = 0; d <= maxdeg; ++d) {
        if (nvars == 0) {
            if (d == 0) out.push_back(cur);
            continue;
        }
        tuples_of_degree(nvars, d, 0, cur, out);
    }
    return out;
}

struct SolveSetup {
    SymbolicWeierstrassCoeffs F;
    VarRegistry::Ptr solvereg;
    std::vector<Cand> cands;
};

// C-variable candidates from the nonzero F entries inside the exactness
// window; optionally also the A-variables below a bound (for the
// characteristic-coefficient relations).
SolveSetup make_setup(const Characteristic& ch, long P, const std::optional<std::set<long>>& support,
                      std::optional<long> a_below) {
    SolveSetup s{symbolic_weierstrass_coeffs(ch, P, support), nullptr, {}};
    long n = ch.n();
    std::vector<VarDescriptor> vars;
    std::vector<std::pair<long, long>> cmeta; // (weight, adeg) parallel to vars
    std::vector<MultiPoly<Rational>> images;
    for (const auto& [ij, poly] : s.F.entries) {
        auto [i, j] = ij;
        if (i < 1 || j > n - 1) continue;
        vars.push_back(VarDescriptor::C(i, j));
        cmeta.emplace_back(n * i, n - j);
        images.push_back(poly);
    }
    if (a_below) {
        for (long i : s.F.support) {
            if (i >= *a_below) continue;
            vars.push_back(VarDescriptor::A(i));
            cmeta.emplace_back(i, 1);
            images.push_back(MultiPoly<Rational>::variable(
                s.F.areg, *s.F.areg->index_of(VarDescriptor::A(i)), Rational(1)));
        }
    }
    s.solvereg = VarRegistry::make(vars);
    for (size_t k = 0; k < vars.size(); ++k)
        s.cands.push_back(Cand{k, cmeta[k].first, cmeta[k].second, images[k]});
    return s;
}

// Default truncation: 3*b_m; with a restricted support the parametrisation is
// a polynomial, so the window extends to n*max(supp), which covers every
// nonzero F entry.
long default_truncation(const Characteristic& ch, const std::optional<std::set<long>>& support) {
    long P = 3 * ch.b().back();
    if (support && !support->empty()) P = std::max(P, ch.n() * *support->rbegin());
    return P;
}

MultiPoly<Rational> b_monomial(const SymbolicWeierstrassCoeffs& F, const Characteristic& ch,
                               const std::vector<long>& exps, long upto) {
    ExpVec e(F.areg->size(), 0);
    for (long k = 1; k <= upto; ++k) {
        long lk = exps[static_cast<size_t>(k - 1)];
        if (lk == 0) continue;
        auto idx = F.areg->index_of(VarDescriptor::A(ch.b()[static_cast<size_t>(k)]));
        if (!idx) fail(Errc::internal, "characteristic exponent missing from A-registry");
        e[*idx] = lk;
    }
    return MultiPoly<Rational>::monomial(F.areg, e, Rational(1));
}

} // namespace

MultiPoly<Rational> substitute_cf(const MultiPoly<Rational>& w, const SymbolicWeierstrassCoeffs& F) {
    MultiPoly<Rational> out(F.areg);
    const auto& reg = *w.reg();
    for (const auto& [e, c] : w.terms()) {
        MultiPoly<Rational> prod = MultiPoly<Rational>::constant(F.areg, c);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            const auto& d = reg.var(k);
            if (d.kind == VarKind::C) {
                prod *= F.entry(d.i, d.j).pow(e[k]);
            } else if (d.kind == VarKind::A) {
                auto idx = F.areg->index_of(d);
                if (!idx) fail(Errc::registry_mismatch, d.name() + " outside the A-registry");
                prod *= MultiPoly<Rational>::variable(F.areg, *idx, Rational(1)).pow(e[k]);
            } else {
                fail(Errc::usage, "structural variable in a coefficient polynomial");
            }
        }
        out += prod;
    }
    return out;
}

long residue_j(const Characteristic& ch, long k, long i) {
    if (k < 1 || k > ch.m()) fail(Errc::usage, "level out of range");
    long nk = ch.nk(k);
    long ek1 = ch.e()[static_cast<size_t>(k - 1)];
    long bk = ch.b()[static_cast<size_t>(k)];
    for (long j = 0; j < nk; ++j) {
        long r = (bk * j - i) % ek1;
        if (r < 0) r += ek1;
        if (r == 0) return j;
    }
    fail(Errc::usage, "no j_i with b_k j ≡ i (mod e_{k-1}): i is outside the level-k window");
}

RewriteOutcome rewrite_invariant(const MultiPoly<Rational>& Q, const Characteristic& ch,
                                 std::optional<std::set<long>> support, Budget budget) {
    long n = ch.n();

    long P = budget.truncation >= 0 ? budget.truncation : default_truncation(ch, support);
    long D = budget.w_degree >= 0 ? budget.w_degree : 6;
    long L = budget.den_degree >= 0 ? budget.den_degree : 3 * n;
    if (!is_un_invariant(Q, n)) fail(Errc::not_invariant, "Q is not U_n-invariant");

    auto setup = make_setup(ch, P, support, std::nullopt);
    auto Qa = Q.transport(setup.F.areg);

    long m = ch.m();
    for (int round = 0; round <= budget.escalation_rounds; ++round) {
        for (const auto& muexp : monomials_up_to(m, L)) {
            auto mupoly = b_monomial(setup.F, ch, muexp, m);
            auto W = solve_for(Qa * mupoly, setup.cands, setup.solvereg, D);
            if (!W) continue;
            auto V = solve_for(mupoly, setup.cands, setup.solvereg, D);
            if (!V) continue;
            if (!(substitute_cf(*W, setup.F) == Qa * mupoly) ||
                !(substitute_cf(*V, setup.F) == mupoly))
                fail(Errc::internal, "rewrite verification failed");
            RewriteResult res{*W, *V, {}, Rational(1), P, D, L};
            for (long k = 1; k <= m; ++k)
                if (muexp[static_cast<size_t>(k - 1)] > 0)
                    res.mu[ch.b()[static_cast<size_t>(k)]] = muexp[static_cast<size_t>(k - 1)];
            return res;
        }
        if (round < budget.escalation_rounds) {
            D *= 2;
            L *= 2;
        }
    }
    return BudgetReport{P, D, L};
}

std::variant<CharCoeffRelation, BudgetReport> char_coeff_relation(const Characteristic& ch, long k,
                                                                  std::optional<std::set<long>> support,
                                                                  Budget budget) {
    if (k < 1 || k > ch.m()) fail(Errc::usage, "level k out of range");
    long n = ch.n();

    long bk = ch.b()[static_cast<size_t>(k)];
    long nk = ch.nk(k);
    long P = budget.truncation >= 0 ? budget.truncation : default_truncation(ch, support);
    long D = budget.w_degree >= 0 ? budget.w_degree : 6;
    long L = budget.den_degree >= 0 ? budget.den_degree : 3 * n;

    auto setup = make_setup(ch, P, support, bk);
    ExpVec target_e(setup.F.areg->size(), 0);
    auto bk_idx = setup.F.areg->index_of(VarDescriptor::A(bk));
    if (!bk_idx) fail(Errc::internal, "A_{b_k} missing from registry");
    target_e[*bk_idx] = nk;
    auto base = MultiPoly<Rational>::monomial(setup.F.areg, target_e, Rational(1));

    for (int round = 0; round <= budget.escalation_rounds; ++round) {
        for (const auto& nexp : monomials_up_to(k - 1, L)) {
            auto npoly = b_monomial(setup.F, ch, nexp, k - 1);
            auto M = solve_for(base * npoly, setup.cands, setup.solvereg, D);
            if (!M) continue;
            if (!(substitute_cf(*M, setup.F) == base * npoly))
                fail(Errc::internal, "relation verification failed");
            CharCoeffRelation rel{k, nk, *M, {}, P, D, L};
            for (long l = 1; l <= k - 1; ++l)
                if (nexp[static_cast<size_t>(l - 1)] > 0)
                    rel.N[ch.b()[static_cast<size_t>(l)]] = nexp[static_cast<size_t>(l - 1)];
            return rel;
        }
        if (round < budget.escalation_rounds) {
            D *= 2;
            L *= 2;
        }
    }
    return BudgetReport{P, D, L};
}

namespace {

using MPK = MultiPoly<RationalFunction>;

MPK trunc_t(const MPK& p, long cap) {
    MPK out(p.reg());
    for (const auto& [e, c] : p.terms())
        if (e[0] <= cap) out.add_term(e, c);
    return out;
}

} // namespace

long split_leading_exponent(const Characteristic& ch) {
    long m = ch.m();
    if (m < 1) fail(Errc::usage, "split needs m >= 1");
    const auto& b = ch.b();
    const auto& e = ch.e();
    long bbar = e[static_cast<size_t>(m - 1)] * b[static_cast<size_t>(m)];
    for (long j = 1; j <= m - 1; ++j)
        bbar += (e[static_cast<size_t>(j - 1)] - e[static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
    return bbar;
}

ShiftedSplit split_shifted_series(const Characteristic& ch, long P, long excess) {
    if (excess < 0) fail(Errc::usage, "negative excess");
    long n = ch.n();
    long m = ch.m();
    if (m < 1) fail(Errc::usage, "split needs m >= 1");
    const auto& b = ch.b();
    const auto& e = ch.e();
    long bbar = split_leading_exponent(ch);
    if (P < bbar) fail(Errc::insufficient_truncation, "split needs truncation >= bbar_m");

    auto tyreg = make_xy_registry('T');
    auto F = symbolic_weierstrass_coeffs(ch, P, std::nullopt);

    auto avar = [&](long i) {
        return RationalFunction::from_poly(
            MultiPoly<Rational>::variable(F.areg, *F.areg->index_of(VarDescriptor::A(i)), Rational(1)));
    };
    auto kconst = [&](const MultiPoly<Rational>& p) { return RationalFunction::from_poly(p); };
    RationalFunction kone = RationalFunction::one(F.areg);

    // lambda = sum_{i in I, i < b_m} A_i T^i and the shift Y + lambda
    MPK lambda(tyreg);
    for (long i : F.support)
        if (i < b.back()) lambda.add_term(ExpVec{i, 0}, avar(i));
    MPK ypl = MPK::variable(tyreg, 1, kone) + lambda;

    std::vector<MPK> ypl_pow{MPK::constant(tyreg, kone)};
    for (long j = 1; j <= n; ++j) ypl_pow.push_back(trunc_t(ypl_pow.back() * ypl, P));

    MPK fhat(tyreg);
    for (const auto& [ij, poly] : F.entries) {
        auto [i, j] = ij;
        MPK shift = MPK::monomial(tyreg, ExpVec{n * i, 0}, kconst(poly));
        fhat += trunc_t(shift * ypl_pow[static_cast<size_t>(j)], P);
    }

    // leading term of fhat(T, 0)
    MultiPoly<Rational> leading_coeff(F.areg);
    {
        long best = -1;
        RationalFunction lead = RationalFunction::zero(F.areg);
        for (const auto& [ee, c] : fhat.terms()) {
            if (ee[1] != 0) continue;
            if (best < 0 || ee[0] < best) { best = ee[0]; lead = c; }
        }
        if (best != bbar) fail(Errc::internal, "fhat(T,0) does not start at T^bbar");
        if (!lead.is_polynomial()) fail(Errc::internal, "fhat(T,0) leading coefficient not polynomial");
        Rational dconst = lead.den().terms().begin()->second;
        leading_coeff = lead.num().scaled(dconst.inverse());
    }

    std::vector<SplitStage> stages;
    std::vector<MPK> factors;
    std::vector<MPK> initial_forms;

    // Internally each stage lifts to its full available window; the requested
    // excess only shapes the returned factor truncations.
    MPK cur = fhat;
    long cap = P;
    for (long j = 1; j <= m - 1; ++j) {
        long bj = b[static_cast<size_t>(j)];
        Weight w(1, bj);
        long ej = e[static_cast<size_t>(j)];
        long nj = ch.nk(j);
        // in_(1,b_j) fhat_j = Y^{-e_j} ((Y + A_{b_j} T^{b_j})^{n_j} - A_{b_j}^{n_j} T^{b_j n_j})^{e_j}
        MPK lin = MPK::variable(tyreg, 1, kone) + MPK::monomial(tyreg, ExpVec{bj, 0}, avar(bj));
        MPK base = lin.pow(nj) - MPK::monomial(tyreg, ExpVec{bj * nj, 0}, avar(bj).pow(nj));
        MPK base_div(tyreg); // base / Y, exact
        for (const auto& [ee, c] : base.terms()) {
            if (ee[1] < 1) fail(Errc::internal, "initial-form seed not divisible by Y");
            ExpVec f2 = ee;
            f2[1] -= 1;
            base_div.add_term(f2, c);
        }
        MPK G = base_div.pow(ej);
        MPK H = MPK::monomial(tyreg, ExpVec{0, ej}, kone);
        long s = weight_of(G, w);
        long t = weight_of(H, w);
        long avail = cap - s - t;
        if (avail < 0) fail(Errc::insufficient_truncation, "window too small for split stage");
        MPK input = truncate_by_weight(cur, w, s + t + avail);
        auto lift = hensel_lift(input, w, G, H, avail);
        stages.push_back(SplitStage{w, cap, avail, input, G, H, lift.g, lift.h, lift.res_x1});
        initial_forms.push_back(G);
        factors.push_back(truncate_by_weight(lift.g, w, s + std::min(excess, avail)));
        cur = lift.h;
        cap = t + avail;
    }

    long bm2 = b[static_cast<size_t>(m)];
    long nm = ch.nk(m);
    Weight wm(1, bm2);
    MPK Gm = MPK::monomial(tyreg, ExpVec{0, nm}, kone) -
             MPK::monomial(tyreg, ExpVec{bm2 * nm, 0}, avar(bm2).pow(nm));
    long inw = nm * bm2;
    if (cap < inw) fail(Errc::internal, "final stage window below its initial weight");
    MPK last = truncate_by_weight(cur, wm, cap);
    if (!(initial_form(last, wm) == Gm))
        fail(Errc::internal, "last factor initial form does not match the closed form");
    initial_forms.push_back(Gm);
    factors.push_back(truncate_by_weight(last, wm, std::min(cap, inw + excess)));

    return ShiftedSplit{ch,      P,       F.areg,        tyreg, fhat, std::move(stages),
                        std::move(factors), std::move(initial_forms), cap,   bbar, leading_coeff};
}

std::variant<SeriesRewriteResult, BudgetReport> rewrite_series_invariant(
    const BivariateSeries& f, const Characteristic& ch, const MultiPoly<Rational>& Q,
    std::optional<std::set<long>> support, Budget budget) {
    auto [m0, c] = y_regularity(f);
    if (m0 != ch.n())
        fail(Errc::usage, "Y-order of the series does not match the class degree");
    BivariateSeries fn = f;
    if (!c.is_one()) fn = BivariateSeries(f.poly.scaled(c.inverse()), f.prec);
    auto prep = weierstrass_prepare(fn);
    auto rw = rewrite_invariant(Q, ch, std::move(support), budget);
    if (std::holds_alternative<BudgetReport>(rw)) return std::get<BudgetReport>(rw);
    return SeriesRewriteResult{c, std::move(prep), std::get<RewriteResult>(std::move(rw))};
}

std::variant<MultiPoly<Rational>, BudgetReport> translate_nondegeneracy(
    const MultiPoly<Rational>& Q, const Characteristic& ch, std::optional<std::set<long>> support,
    Budget budget) {
    for (const auto& d : Q.reg()->vars())
        if (d.kind != VarKind::A) fail(Errc::usage, "translate expects a polynomial in the A-variables");
    auto sym = symmetrize(Q, ch.n());
    auto rw = rewrite_invariant(sym, ch, std::move(support), budget);
    if (std::holds_alternative<BudgetReport>(rw)) return std::get<BudgetReport>(rw);
    auto W = std::get<RewriteResult>(rw).W;
    if (W.is_zero_poly()) return W;
    W = W.scaled(integer_content(W).inverse());
    if (W.terms().rbegin()->second.sign() < 0) W = -W;
    return W;
}

std::variant<MembershipFound, MembershipNone> subalgebra_membership_check(
    const MultiPoly<Rational>& Q, const Characteristic& ch, std::optional<std::set<long>> support,
    long P, long D) {
    long n = ch.n();
    if (P < 0) P = default_truncation(ch, support);
    if (!is_un_invariant(Q, n)) fail(Errc::not_invariant, "Q is not U_n-invariant");
    auto setup = make_setup(ch, P, support, std::nullopt);
    auto Qa = Q.transport(setup.F.areg);
    auto W = solve_for(Qa, setup.cands, setup.solvereg, D);
    if (!W) return MembershipNone{D};
    if (!(substitute_cf(*W, setup.F) == Qa)) fail(Errc::internal, "membership verification failed");
    return MembershipFound{*W};
}

} // namespace puiseux
