#pragma once

#include <vector>

#include "wschub/rational.hpp"

namespace wschub {

struct NonnegSolveResult {
  bool feasible = false;
  // feasible: x >= 0 with A x = b
  std::vector<Rational> x;
  // infeasible: y with y^T A <= 0 and y^T b > 0
  std::vector<Rational> farkas;
};

// Exact phase-1 simplex (Bland's rule, so it terminates) for A x = b, x >= 0.
// A is row-major, m rows by n columns. The returned witness is verified
// against A and b before being handed back.
NonnegSolveResult solve_nonneg_linear(const std::vector<std::vector<Rational>>& A,
                                      const std::vector<Rational>& b);

}  // namespace wschub
