#pragma once

// Fraction-free Gaussian elimination (Bareiss) for exact solves of
// possibly overdetermined systems A x = b over Q.

#include "thetaratio/config.hpp"
#include "thetaratio/errors.hpp"

#include <cstddef>
#include <vector>

namespace thetaratio {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b where A is m x c with m >= c and full column rank.
/// Rows are scaled to integers first; elimination then keeps every entry
/// integral (each step divides exactly by the previous pivot).
/// Throws NotInSpan when b is not in the column space, PreconditionViolation
/// when A is column-rank deficient.
inline std::vector<Rational> bareiss_solve(const RationalMatrix& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (m != b.size()) throw DomainError("bareiss_solve: row count mismatch");
  const std::size_t c = m ? A[0].size() : 0;

  std::vector<std::vector<Integer>> M(m, std::vector<Integer>(c + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != c) throw DomainError("bareiss_solve: ragged matrix");
    Integer den(1);
    for (const auto& v : A[i]) den = lcm(den, Integer(denominator(v)));
    den = lcm(den, Integer(denominator(b[i])));
    for (std::size_t j = 0; j < c; ++j) M[i][j] = numerator(A[i][j]) * (den / denominator(A[i][j]));
    M[i][c] = numerator(b[i]) * (den / denominator(b[i]));
  }

  Integer prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c; ++col) {
    std::size_t piv = row;
    while (piv < m && M[piv][col] == 0) ++piv;
    if (piv == m) throw PreconditionViolation("bareiss_solve: matrix is column-rank deficient");
    std::swap(M[piv], M[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j <= c; ++j) {
        M[i][j] = (M[row][row] * M[i][j] - M[i][col] * M[row][j]) / prev;
      }
      M[i][col] = 0;
    }
    prev = M[row][row];
    ++row;
  }
  for (std::size_t i = c; i < m; ++i) {
    if (M[i][c] != 0) throw NotInSpan("bareiss_solve: system is inconsistent");
  }

  std::vector<Rational> x(c);
  for (std::size_t i = c; i-- > 0;) {
    Rational s(M[i][c]);
    for (std::size_t j = i + 1; j < c; ++j) s -= Rational(M[i][j]) * x[j];
    x[i] = s / Rational(M[i][i]);
  }
  return x;
}

}  // namespace thetaratio
