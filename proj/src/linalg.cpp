#include "heights/linalg.hpp"

#include <utility>

#include "heights/error.hpp"

namespace heights {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational{};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = m[r][col].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const Rational factor = m[i][col] * inv;
      for (std::size_t c = col; c < cols; ++c) m[i][c] -= factor * m[r][c];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace heights
