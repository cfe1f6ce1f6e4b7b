#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

struct ExactSolve {
  bool consistent = false;
  std::size_t rank = 0;
  /// Present when the system is consistent with full column rank.
  std::optional<std::vector<Rational>> solution;
};

/// Solves A x = b exactly by Gauss-Jordan elimination. A may be
/// overdetermined; the rows are checked for consistency.
inline ExactSolve solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  ExactSolve out;
  out.rank = r;
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) out.consistent = false;
  if (out.consistent && r == cols) {
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
    out.solution = std::move(x);
  }
  return out;
}

}  // namespace hurwitz
