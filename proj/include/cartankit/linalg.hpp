// linalg.hpp
// Dense exact linear algebra over Q(i): Gaussian elimination, solve and
// nullspace.  Sizes here are tiny (expansion of supermatrices, cocycle
// ansatz spaces), so no pivot-growth tricks are needed beyond exactness.

#pragma once

#include <optional>
#include <vector>

#include "cartankit/rational.hpp"

namespace cartankit {

using GRow = std::vector<GaussianRational>;
using GMat = std::vector<GRow>;

// Reduced row echelon form in place; returns pivot column per row.
inline std::vector<int> rref(GMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    GaussianRational inv = GaussianRational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussianRational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

// Solve A x = b exactly; nullopt when inconsistent.  When the solution is
// not unique the free variables are set to zero.
inline std::optional<GRow> solve_linear(const GMat& a, const GRow& b) {
  if (a.empty()) return GRow{};
  std::size_t rows = a.size(), cols = a[0].size();
  GMat aug(rows, GRow(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug);
  for (std::size_t i = 0; i < rows; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (!aug[i][j].is_zero()) all_zero = false;
    if (all_zero && !aug[i][cols].is_zero()) return std::nullopt;
  }
  GRow x(cols, GaussianRational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

// Basis of the right nullspace of A.
inline std::vector<GRow> nullspace(const GMat& a) {
  std::vector<GRow> basis;
  if (a.empty()) return basis;
  GMat m = a;
  std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    GRow v(cols, GaussianRational(0));
    v[f] = GaussianRational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cartankit
