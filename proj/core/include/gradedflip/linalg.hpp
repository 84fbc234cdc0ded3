#pragma once

#include <vector>

#include "gradedflip/field.hpp"

namespace gradedflip {

/// Rank via exact Gaussian elimination. Rows may have differing content but
/// must all share one field. Destroys its argument.
inline std::size_t matrix_rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = m[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gradedflip
