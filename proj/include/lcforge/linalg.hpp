#pragma once

#include <cstddef>
#include <vector>

#include "lcforge/field.hpp"

namespace lcforge {

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// In-place reduced row echelon form. Pivots are taken column by column from
/// the first remaining row with a nonzero entry, so the result depends only
/// on the input. Returns the rank; the first `rank` rows are the nonzero rows.
inline std::size_t row_reduce(FieldMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    auto inv = m[rank][c].inverse();
    for (auto& e : m[rank]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      auto factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t matrix_rank(FieldMatrix m) { return row_reduce(m); }

inline FieldElement determinant(FieldMatrix m, const FieldSpec& field) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  auto det = FieldElement::one(field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return FieldElement::zero(field);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    auto inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      auto factor = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

}  // namespace lcforge
