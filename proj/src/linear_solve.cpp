#include "regula/linear_solve.hpp"

#include "regula/errors.hpp"

namespace regula {

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b, std::size_t columns) {
  if (a.size() != b.size()) throw PreconditionError("solve_linear: row count mismatch");
  const std::size_t rows = a.size();
  RatMatrix m = a;
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != columns) throw PreconditionError("solve_linear: ragged matrix");
    m[r].push_back(b[r]);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < columns && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    const Rat inv = m[prow][col].inverse();
    for (auto& v : m[prow]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || m[r][col].is_zero()) continue;
      const Rat f = m[r][col];
      for (std::size_t k = col; k <= columns; ++k) m[r][k] -= f * m[prow][k];
    }
    pivot_cols.push_back(col);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r)
    if (!m[r][columns].is_zero()) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(columns, Rat());
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    sol.particular[pivot_cols[i]] = m[i][columns];
    is_pivot[pivot_cols[i]] = true;
  }
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(columns, Rat());
    v[free] = Rat(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace regula
