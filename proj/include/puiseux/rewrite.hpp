#pragma once

#include <variant>

#include "puiseux/branch.hpp"
#include "puiseux/hensel.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/rational_function.hpp"
#include "puiseux/weierstrass.hpp"

namespace puiseux {

/// Search budgets for the ansatz solver; -1 picks the documented defaults
/// (truncation 3*b_m, W-degree 6, denominator degree 3*n).
struct Budget {
    long truncation = -1;
    long w_degree = -1;
    long den_degree = -1;
    int escalation_rounds = 0; // how many times W/denominator degrees may double
};

struct BudgetReport {
    long truncation = 0;
    long w_degree_reached = 0;
    long den_degree_reached = 0;
};

/// Q * V(F) = W(F) with V(F) = mu_scale * (monomial mu in the A_{b_k}).
struct RewriteResult {
    MultiPoly<Rational> W; // over the C-variable registry
    MultiPoly<Rational> V;
    std::map<long, long> mu; // b_k value -> exponent
    Rational mu_scale;
    long truncation = 0, w_degree = 0, den_degree = 0; // budgets in effect
};

using RewriteOutcome = std::variant<RewriteResult, BudgetReport>;

/// The rewriting identity as a deterministic search: denominator monomials mu are
/// enumerated by total degree then lexicographically; for each mu the two
/// finite linear systems W(F) = Q*mu and V(F) = mu are solved by exact
/// elimination; the first solvable mu wins. ExhaustedBudget is explicitly not
/// a nonexistence claim.
RewriteOutcome rewrite_invariant(const MultiPoly<Rational>& Q, const Characteristic& ch,
                                 std::optional<std::set<long>> support, Budget budget);

/// A_{b_k}^{n_k} * N = M(F, A-low) with N a monomial in A_{b_1}..A_{b_{k-1}}.
struct CharCoeffRelation {
    long k = 0;
    long nk = 0;
    MultiPoly<Rational> M;   // over C-variables plus A_i, i < b_k
    std::map<long, long> N;  // b_l value -> exponent, l < k
    long truncation = 0, w_degree = 0, den_degree = 0;
};

std::variant<CharCoeffRelation, BudgetReport> char_coeff_relation(const Characteristic& ch, long k,
                                                                  std::optional<std::set<long>> support,
                                                                  Budget budget);

/// One pairwise-lift stage of the shifted-series split.
struct SplitStage {
    Weight omega;
    long cap = 0; // weight window of the stage input under omega
    long excess = 0;
    MultiPoly<RationalFunction> input;        // product before the stage, truncated to cap
    MultiPoly<RationalFunction> seed_g;       // closed-form in_omega of the split-off factor
    MultiPoly<RationalFunction> seed_h;       // Y^{e_j}
    MultiPoly<RationalFunction> factor;       // lifted f_hat_j
    MultiPoly<RationalFunction> rest;         // lifted f_hat_{j+1} ... f_hat_m
    RationalFunction res_x1;                  // Res(seed_g, seed_h)|_{T=1}
};

struct ShiftedSplit {
    Characteristic ch;
    long truncation = 0;
    VarRegistry::Ptr areg;  // A_i, i in I ∩ [1, P]
    VarRegistry::Ptr tyreg; // {T, Y}
    MultiPoly<RationalFunction> fhat; // f*(T^n, Y + lambda), exact for T-degree <= P
    std::vector<SplitStage> stages;   // m-1 lifts
    std::vector<MultiPoly<RationalFunction>> factors;       // f_hat_1 .. f_hat_m
    std::vector<MultiPoly<RationalFunction>> initial_forms; // in_{(1,b_j)} f_hat_j
    long final_cap = 0; // weight window of the last factor under (1, b_m)
    long bbar = 0;      // e_{m-1} b_m + sum_{j<m} (e_{j-1}-e_j) b_j
    MultiPoly<Rational> leading_coeff; // coefficient of T^bbar in fhat(T, 0)
};

/// e_{m-1} b_m + sum_{j<m} (e_{j-1}-e_j) b_j, the order of fhat(T, 0).
long split_leading_exponent(const Characteristic& ch);

/// Shifted-series split: shift by lambda = sum_{i in I, i < b_m} A_i T^i,
/// then iterated pairwise generic Hensel lifts against the proof's closed-form
/// initial polynomials. Requires P >= bbar. Per-stage excess is
/// min(excess, available window).
ShiftedSplit split_shifted_series(const Characteristic& ch, long P, long excess);

struct SeriesRewriteResult {
    Rational c0n;               // the unit scale divided out of f
    PreparedFactorization prep; // of f / c0n
    RewriteResult rw;
};

std::variant<SeriesRewriteResult, BudgetReport> rewrite_series_invariant(
    const BivariateSeries& f, const Characteristic& ch, const MultiPoly<Rational>& Q,
    std::optional<std::set<long>> support, Budget budget);

/// Non-degeneracy translation: symmetrize, rewrite, return the numerator W in C,
/// normalized by integer content and sign. Zero-set equivalent to Q = 0 on the
/// class (where all A_{b_k} differ from 0).
std::variant<MultiPoly<Rational>, BudgetReport> translate_nondegeneracy(
    const MultiPoly<Rational>& Q, const Characteristic& ch, std::optional<std::set<long>> support,
    Budget budget);

struct MembershipFound {
    MultiPoly<Rational> W;
};
struct MembershipNone {
    long degree = 0;
};

/// Bounded-degree subalgebra membership: is there W with C-degree <= D and
/// W(F) = Q? NoneUpToDegree is a bounded certificate only.
std::variant<MembershipFound, MembershipNone> subalgebra_membership_check(
    const MultiPoly<Rational>& Q, const Characteristic& ch, std::optional<std::set<long>> support,
    long P, long D);

/// Substitute C_{ij} -> F_{ij} (A-variables pass through); result lives in the
/// coefficient registry of F.
MultiPoly<Rational> substitute_cf(const MultiPoly<Rational>& w, const SymbolicWeierstrassCoeffs& F);

/// The unique j_i with 0 <= j_i < n_k and b_k * j_i ≡ i (mod e_{k-1}), by
/// direct modular search (the residue pairing A_i <-> A_{b_k}^{j_i}).
long residue_j(const Characteristic& ch, long k, long i);

} // namespace puiseux
