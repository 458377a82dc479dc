#pragma once

// Exact Gaussian elimination over a FieldCtx. Dimensions here never exceed 9.

#include <cstddef>
#include <vector>

#include "rankone/field.hpp"

namespace rankone {

using Row = std::vector<Elem>;

/// Reduced row echelon form; returns the nonzero rows and fills pivot columns.
inline std::vector<Row> row_reduce(const FieldCtx& F, std::vector<Row> rows, std::vector<std::size_t>* pivots = nullptr) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem s = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem m = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(m, rows[r][k]));
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

inline std::size_t rank(const FieldCtx& F, std::vector<Row> rows) { return row_reduce(F, std::move(rows)).size(); }

/// Basis of {x : rows * x = 0}.
inline std::vector<Row> nullspace(const FieldCtx& F, std::vector<Row> rows, std::size_t cols) {
  std::vector<std::size_t> piv;
  const auto R = row_reduce(F, std::move(rows), &piv);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < R.size(); ++i) x[piv[i]] = F.neg(R[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline bool in_span(const FieldCtx& F, const std::vector<Row>& basis, const Row& v) {
  std::vector<Row> rows = basis;
  const std::size_t before = rank(F, rows);
  rows.push_back(v);
  return rank(F, std::move(rows)) == before;
}

inline Elem determinant(const FieldCtx& F, std::vector<Row> m) {
  const std::size_t n = m.size();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    const Elem s = F.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Elem f = F.mul(m[i][c], s);
      for (std::size_t k = c; k < n; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[c][k]));
    }
  }
  return det;
}

}  // namespace rankone
