#pragma once

#include <optional>
#include <vector>

#include "paracolor/rational.hpp"

namespace paracolor::linalg {

// Exact Gauss-Jordan solve of A x = b. Returns a particular solution with
// free variables at zero, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
    size_t cols) {
  const size_t m = rows.size();
  std::vector<size_t> pivot_col(m, cols);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < m; ++col) {
    size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    const Rational inv = rows[rank][col];
    for (size_t c = col; c < cols; ++c) rows[rank][c] /= inv;
    rhs[rank] /= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (size_t r = rank; r < m; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

}  // namespace paracolor::linalg
