#ifndef REGULA_LINEAR_SOLVE_HPP
#define REGULA_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "regula/rational.hpp"

namespace regula {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;  // row-major, all rows equal length

struct LinearSolution {
  RatVector particular;             // free variables set to zero
  std::vector<RatVector> nullspace; // one basis vector per free column, in column order
};

/// Exact Gauss-Jordan solve of A*x = b. Returns nullopt if inconsistent.
/// `columns` is needed when A has no rows.
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b, std::size_t columns);

}  // namespace regula

#endif  // REGULA_LINEAR_SOLVE_HPP
