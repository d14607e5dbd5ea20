#pragma once

#include "puiseux/multipoly.hpp"

namespace puiseux {

/// A-weight of a monomial: sum of i * (exponent of A_i). C-variables and
/// structural variables carry weight 0 (C's are already U_n-invariant after
/// the C = F substitution).
long a_weight(const ExpVec& e, const VarRegistry& reg);

/// U_n-invariance of Q in the A-variables: substituting A_i -> eps^i A_i
/// scales each monomial by eps^(A-weight), and the n-th roots of unity
/// separate residues, so Q is invariant iff every monomial has A-weight
/// divisible by n.
bool is_un_invariant(const MultiPoly<Rational>& q, long n);

/// prod_{eps in U_n} Q(eps^{i_1} A_{i_1}, ...), computed without complex
/// numbers: group the monomials of Q by A-weight mod n into B(z) = sum Q_r z^r
/// and take the determinant of multiplication by B on Q[z]/(z^n - 1) (a
/// circulant), which equals Res_z(z^n - 1, B) = prod_{eps} B(eps) with the
/// sign convention symmetrize(invariant Q) = Q^n built in.
MultiPoly<Rational> symmetrize(const MultiPoly<Rational>& q, long n);

} // namespace puiseux
