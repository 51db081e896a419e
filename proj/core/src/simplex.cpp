#include "wschub/simplex.hpp"

#include <stdexcept>

namespace wschub {

NonnegSolveResult solve_nonneg_linear(const std::vector<std::vector<Rational>>& A,
                                      const std::vector<Rational>& b) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  for (const auto& row : A)
    if ((int)row.size() != n) throw std::invalid_argument("ragged matrix");
  if ((int)b.size() != m) throw std::invalid_argument("rhs size mismatch");

  // Tableau with artificial basis: columns [x (n) | s (m) | rhs].
  // Rows are flipped as needed so rhs >= 0; remember the flips to map the
  // dual witness back to the original system.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + m + 1));
  std::vector<bool> flipped(m, false);
  for (int i = 0; i < m; ++i) {
    Rational sgn = (b[i] < 0) ? Rational(-1) : Rational(1);
    flipped[i] = b[i] < 0;
    for (int j = 0; j < n; ++j) T[i][j] = sgn * A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = sgn * b[i];
  }

  // Phase-1 objective: minimize sum of artificials. Reduced-cost row z holds
  // c_j - c_B B^{-1} A_j; z[n+m] holds -objective.
  std::vector<Rational> z(n + m + 1, Rational(0));
  for (int j = 0; j <= n + m; ++j) {
    Rational s(0);
    for (int i = 0; i < m; ++i) s += T[i][j];
    z[j] = ((j >= n && j < n + m) ? Rational(1) : Rational(0)) - s;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][n + m] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("phase-1 problem is unbounded");
    Rational piv = T[leave][enter];
    for (int j = 0; j <= n + m; ++j) T[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (int j = 0; j <= n + m; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  NonnegSolveResult res;
  Rational objective = -z[n + m];
  if (objective == 0) {
    res.feasible = true;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = T[i][n + m];
    // sanity: plug back in
    for (int i = 0; i < m; ++i) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += A[i][j] * res.x[j];
      if (s != b[i]) throw std::runtime_error("simplex produced an invalid solution");
    }
    for (int j = 0; j < n; ++j)
      if (res.x[j] < 0) throw std::runtime_error("negative basic variable");
    return res;
  }

  // Dual vector y = c_B B^{-1}; component i is 1 - z[artificial i], then
  // unflip the rows that were negated.
  res.feasible = false;
  res.farkas.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational yi = Rational(1) - z[n + i];
    res.farkas[i] = flipped[i] ? -yi : yi;
  }
  Rational yb(0);
  for (int i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
  if (yb <= 0) throw std::runtime_error("invalid infeasibility witness");
  for (int j = 0; j < n; ++j) {
    Rational ya(0);
    for (int i = 0; i < m; ++i) ya += res.farkas[i] * A[i][j];
    if (ya > 0) throw std::runtime_error("invalid infeasibility witness");
  }
  return res;
}

}  // namespace wschub
