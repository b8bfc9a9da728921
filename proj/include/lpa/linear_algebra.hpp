#ifndef LPA_LINEAR_ALGEBRA_HPP
#define LPA_LINEAR_ALGEBRA_HPP

// Exact Gaussian elimination over the rationals.

#include <cstddef>
#include <utility>
#include <vector>

#include "lpa/ring.hpp"

namespace lpa {

using Rational = RationalRing::value_type;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;              // reduced, nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t columns) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < columns; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const RationalMatrix& m, std::size_t columns) {
  return reduced_row_echelon(m, columns).pivots.size();
}

// Basis of {x : m x = 0}.
inline RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns) {
  RowEchelon e = reduced_row_echelon(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lpa

#endif  // LPA_LINEAR_ALGEBRA_HPP
