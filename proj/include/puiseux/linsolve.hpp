#pragma once

#include <optional>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Solve M x = rhs exactly over the rationals. Rows are cleared to integers,
/// the forward pass is fraction-free (Bareiss), columns are eliminated in the
/// given order with the first nonzero row as pivot, and free variables are
/// fixed to 0 — identical inputs always give the identical solution.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m,
                                                 std::vector<Rational> rhs);

inline std::optional<std::vector<Rational>> solve_exact_impl(std::vector<std::vector<mpz_class>>& a,
                                                             size_t rows, size_t cols) {
    // a is rows x (cols+1), augmented. Bareiss elimination.
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
    mpz_class denom = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && sgn(a[p][col]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j <= cols; ++j) {
                mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][col] = 0;
        }
        denom = a[rank][col];
        pivots.emplace_back(rank, col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (sgn(a[i][cols]) != 0) return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (size_t k = pivots.size(); k-- > 0;) {
        auto [r, c] = pivots[k];
        Rational acc(a[r][cols]);
        for (size_t j = c + 1; j < cols; ++j) {
            if (sgn(a[r][j]) == 0 || x[j].is_zero()) continue;
            acc -= Rational(a[r][j]) * x[j];
        }
        x[c] = acc / Rational(a[r][c]);
    }
    return x;
}

inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m,
                                                        std::vector<Rational> rhs) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    if (rhs.size() != rows) fail(Errc::usage, "rhs size mismatch");
    if (rows == 0) return std::vector<Rational>(cols, Rational(0));
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) fail(Errc::usage, "ragged matrix");
        mpz_class lcm = 1;
        for (size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].denominator().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs[i].denominator().get_mpz_t());
        for (size_t j = 0; j < cols; ++j)
            a[i][j] = m[i][j].numerator() * (lcm / m[i][j].denominator());
        a[i][cols] = rhs[i].numerator() * (lcm / rhs[i].denominator());
    }
    return solve_exact_impl(a, rows, cols);
}

} // namespace puiseux
