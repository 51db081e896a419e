#pragma once

#include <memory>
#include <stdexcept>

#include "wschub/weighted.hpp"

namespace wschub {

// Parabolic subset J = simple roots orthogonal to lambda.
inline std::vector<int> parabolic_for(const WeylGroup& W, const IVec& lambda) {
  std::vector<int> J;
  for (int i = 0; i < W.datum().num_simple(); ++i)
    if (dot(lambda, W.datum().simple_coroots[i]) == 0) J.push_back(i);
  return J;
}

inline std::shared_ptr<const ParabolicCosets> cosets_for(
    std::shared_ptr<const WeylGroup> group, const IVec& lambda) {
  return std::make_shared<ParabolicCosets>(group, parabolic_for(*group, lambda));
}

inline WeightedConfig<Rational> numeric_config(std::shared_ptr<const WeylGroup> group,
                                               const IVec& lambda, const IVec& chi) {
  auto cosets = cosets_for(group, lambda);
  return WeightedConfig<Rational>::make_numeric(group, cosets, lambda, chi);
}

inline WeightedConfig<RatFunc> symbolic_config(std::shared_ptr<const WeylGroup> group,
                                               const IVec& lambda) {
  auto cosets = cosets_for(group, lambda);
  return WeightedConfig<RatFunc>::make_symbolic(group, cosets, lambda);
}

// A cocharacter vanishing on every root with lambda . chi > 0; weighting by
// it degenerates to the non-weighted situation (all a_roots = 0, q_w = 1).
inline IVec central_cocharacter(const WeylGroup& W, const IVec& lambda) {
  const RootDatum& d = W.datum();
  int n = d.num_simple(), r = d.rank;
  // kernel of the simple-root matrix over Q by elimination
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(r));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = Rational((long)d.simple_roots[i][j]);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < r && row < n; ++col) {
    int p = -1;
    for (int rr = row; rr < n; ++rr)
      if (m[rr][col] != 0) {
        p = rr;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int rr = 0; rr < n; ++rr) {
      if (rr == row || m[rr][col] == 0) continue;
      Rational f = m[rr][col] / m[row][col];
      for (int c = 0; c < r; ++c) m[rr][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<IVec> kernel;
  for (int free = 0; free < r; ++free) {
    bool is_pivot = false;
    for (int c : pivot_col) is_pivot |= (c == free);
    if (is_pivot) continue;
    std::vector<Rational> v(r, Rational(0));
    v[free] = 1;
    for (int i = 0; i < (int)pivot_col.size(); ++i)
      v[pivot_col[i]] = -m[i][free] / m[i][pivot_col[i]];
    // clear denominators
    Int lcm = 1;
    for (const auto& x : v) {
      Int den = x.get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    IVec iv(r);
    for (int i = 0; i < r; ++i) iv[i] = (long)Rational(v[i] * Rational(lcm)).get_num().get_si();
    kernel.push_back(iv);
  }
  IVec acc(r, 0);
  for (const auto& k : kernel) {
    long p = dot(lambda, k);
    if (p > 0) return k;
    if (p < 0) {
      IVec neg = k;
      for (auto& x : neg) x = -x;
      return neg;
    }
    for (int i = 0; i < r; ++i) acc[i] += k[i];
  }
  if (dot(lambda, acc) > 0) return acc;
  throw std::runtime_error("no central cocharacter pairs positively with lambda");
}

}  // namespace wschub
