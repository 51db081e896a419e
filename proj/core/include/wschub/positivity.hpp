#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/rational.hpp"
#include "wschub/rootdata.hpp"
#include "wschub/schubert.hpp"
#include "wschub/simplex.hpp"
#include "wschub/weighted.hpp"

namespace wschub {

// Unique coordinates of c as a polynomial in the weighted negative simple
// roots bar(beta_i, x); coords uses one variable per simple root. The
// nonnegativity verdict is only meaningful in numeric mode.
template <class K>
struct NegrootExpansion {
  bool in_span = false;
  Poly<K> coords;
  bool nonnegative = false;
};

template <class K>
NegrootExpansion<K> negroot_expand_at(const WeightedConfig<K>& cfg, const Poly<K>& c,
                                      int x_pos) {
  int r = cfg.rank();
  int n = cfg.W().datum().num_simple();
  int xr = cfg.P().rep(x_pos);
  std::vector<LinForm<K>> basis = cfg.negroot_basis(xr);

  // complete the n forms to an invertible r x r matrix with unit rows
  std::vector<std::vector<K>> A;
  for (const auto& f : basis) A.push_back(f);
  {
    std::vector<std::vector<K>> probe = A;
    std::vector<bool> used_col(r, false);
    int row = 0;
    for (int col = 0; col < r && row < (int)probe.size(); ++col) {
      int p = -1;
      for (int q = row; q < (int)probe.size(); ++q)
        if (!(probe[q][col] == K())) {
          p = q;
          break;
        }
      if (p < 0) continue;
      std::swap(probe[p], probe[row]);
      for (int q = 0; q < (int)probe.size(); ++q) {
        if (q == row || probe[q][col] == K()) continue;
        K f = probe[q][col] / probe[row][col];
        for (int cc = 0; cc < r; ++cc) probe[q][cc] = probe[q][cc] - f * probe[row][cc];
      }
      used_col[col] = true;
      ++row;
    }
    if (row < n) throw std::domain_error("weighted negative simple roots are dependent");
    for (int col = 0; col < r; ++col) {
      if (used_col[col]) continue;
      std::vector<K> unit(r, K());
      unit[col] = K(1);
      A.push_back(std::move(unit));
    }
  }

  // invert A over K; x_k = sum_l inv[k][l] y_l
  std::vector<std::vector<K>> inv(r, std::vector<K>(r, K()));
  for (int i = 0; i < r; ++i) inv[i][i] = K(1);
  {
    std::vector<std::vector<K>> M = A;
    for (int col = 0; col < r; ++col) {
      int p = -1;
      for (int q = col; q < r; ++q)
        if (!(M[q][col] == K())) {
          p = q;
          break;
        }
      if (p < 0) throw std::runtime_error("negroot basis completion is singular");
      std::swap(M[p], M[col]);
      std::swap(inv[p], inv[col]);
      K d = M[col][col];
      for (int cc = 0; cc < r; ++cc) {
        M[col][cc] = M[col][cc] / d;
        inv[col][cc] = inv[col][cc] / d;
      }
      for (int q = 0; q < r; ++q) {
        if (q == col || M[q][col] == K()) continue;
        K f = M[q][col];
        for (int cc = 0; cc < r; ++cc) {
          M[q][cc] = M[q][cc] - f * M[col][cc];
          inv[q][cc] = inv[q][cc] - f * inv[col][cc];
        }
      }
    }
  }
  std::vector<LinForm<K>> images;
  for (int k = 0; k < r; ++k) images.push_back(inv[k]);
  Poly<K> in_y = substitute_linear(c, images);

  NegrootExpansion<K> out;
  out.in_span = true;
  out.coords = Poly<K>(n);
  for (const auto& [m, coeff] : in_y.terms()) {
    for (int l = n; l < r; ++l)
      if (m[l] != 0) out.in_span = false;
    if (!out.in_span) break;
    Mono mm(m.begin(), m.begin() + n);
    out.coords.add_term(mm, coeff);
  }
  if (!out.in_span) out.coords = Poly<K>(n);
  if constexpr (WeightedConfig<K>::numeric) {
    out.nonnegative = out.in_span;
    for (const auto& [m, coeff] : out.coords.terms())
      if (coeff < 0) out.nonnegative = false;
  }
  return out;
}

// target = sum coeff * prod(roots in I) over square-free subsets I, with
// nonnegative coefficients, found by exact feasibility.
struct SquarefreeDecomposition {
  bool feasible = false;
  std::vector<std::pair<Rational, std::vector<IVec>>> terms;
};

inline SquarefreeDecomposition squarefree_decompose(const Poly<Rational>& target,
                                                    const std::vector<IVec>& roots,
                                                    std::size_t limit = 500000) {
  SquarefreeDecomposition out;
  if (target.is_zero()) {
    out.feasible = true;
    return out;
  }
  if (!target.is_homogeneous())
    throw std::invalid_argument("squarefree_decompose: target is not homogeneous");
  int d = target.total_degree();
  int n = (int)roots.size();
  if (d > n) return out;

  std::vector<std::vector<int>> subsets;
  std::vector<int> pick;
  auto gen = [&](auto&& self, int start) -> void {
    if ((int)pick.size() == d) {
      subsets.push_back(pick);
      if (subsets.size() > limit)
        throw std::length_error("squarefree_decompose: subset count exceeds the limit");
      return;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  gen(gen, 0);

  int nvars = (int)roots[0].size();
  std::vector<Poly<Rational>> prods;
  std::map<Mono, int, GrlexLess> row_of;
  for (const auto& I : subsets) {
    Poly<Rational> p = Poly<Rational>::constant(nvars, 1);
    for (int i : I) p = p * Poly<Rational>::from_linear(to_linform(roots[i]));
    for (const auto& [m, c] : p.terms())
      row_of.emplace(m, (int)row_of.size());
    prods.push_back(std::move(p));
  }
  for (const auto& [m, c] : target.terms()) row_of.emplace(m, (int)row_of.size());

  std::vector<std::vector<Rational>> A(row_of.size(),
                                       std::vector<Rational>(subsets.size(), 0));
  std::vector<Rational> b(row_of.size(), 0);
  for (int j = 0; j < (int)subsets.size(); ++j)
    for (const auto& [m, c] : prods[j].terms()) A[row_of.at(m)][j] = c;
  for (const auto& [m, c] : target.terms()) b[row_of.at(m)] = c;

  NonnegSolveResult sol = solve_nonneg_linear(A, b);
  if (!sol.feasible) return out;
  out.feasible = true;
  for (int j = 0; j < (int)subsets.size(); ++j) {
    if (sol.x[j] == 0) continue;
    std::vector<IVec> I;
    for (int i : subsets[j]) I.push_back(roots[i]);
    out.terms.push_back({sol.x[j], std::move(I)});
  }
  return out;
}

// Positivity certificate: a nonnegative combination of monomials in weighted
// roots, each factor pinned to the coset at which the recursion peeled it.
struct CertFactor {
  IVec root;
  int x_pos;
};

struct CertTerm {
  Rational coeff;
  std::vector<CertFactor> factors;
};

struct Certificate {
  std::vector<CertTerm> terms;
  bool negative_mode = true;  // Theorem on antidominant chi; else the dominant variant
};

// Re-expansion of sum_I coeff_I * beta_I * delta^H_{Z_w} in the weighted
// basis, one certificate per target coset. One root is peeled per induction
// step via
//   f_{y,I} = bar(beta)(y) f_{y,I'} + sum_{z covering y} (a_beta/a_z)(lambda.gamma^vee) f_{z,I'} ,
// with bar converted to the integral weighted root by the positive factor
// gcd(a_y, a_beta)/a_y.
inline std::vector<Certificate> reexpand_weighted(const WeightedConfig<Rational>& cfg,
                                                  const SquarefreeDecomposition& dec,
                                                  int w_pos, bool negative_mode) {
  const ParabolicCosets& P = cfg.P();
  const WeylGroup& W = cfg.W();
  int npts = P.num_reps();
  if (!cfg.report().all_aw_positive)
    throw std::invalid_argument("reexpand_weighted: requires positive a_w");
  {
    bool anti = true, dom = true;
    for (int g = 0; g < W.num_positive(); ++g) {
      long p = dot(W.pos_root(g), cfg.chi_int());
      if (p > 0) anti = false;
      if (p < 0) dom = false;
    }
    if (negative_mode && !anti)
      throw std::invalid_argument("negative mode requires antidominant chi");
    if (!negative_mode && !dom)
      throw std::invalid_argument("positive mode requires dominant chi");
  }

  // up-covers of each coset, with the witnessing root
  std::vector<std::vector<ParabolicCosets::Cover>> up(npts);
  for (int z = 0; z < npts; ++z)
    for (const auto& cov : P.covers(z)) up[cov.w_pos].push_back({z, cov.root});

  std::vector<Certificate> out(npts);
  for (auto& c : out) c.negative_mode = negative_mode;

  for (const auto& [b_coeff, roots] : dec.terms) {
    if (b_coeff < 0)
      throw std::invalid_argument("reexpand_weighted: negative input coefficient");
    for (const IVec& beta : roots)
      if (cfg.a_int(beta) < 0)
        throw std::invalid_argument("reexpand_weighted: root pairs negatively with chi");

    std::vector<std::vector<CertTerm>> f(npts);
    f[w_pos].push_back({Rational(1), {}});
    for (const IVec& beta : roots) {
      Rational a_beta = Rational(cfg.a_int(beta));
      std::vector<std::vector<CertTerm>> next(npts);
      for (int y = 0; y < npts; ++y) {
        Rational a_y = Rational(cfg.a_int(W.act(P.rep(y), cfg.lambda())));
        Rational conv = Rational(gcd(numerator(a_y), cfg.a_int(beta))) / a_y;
        for (const CertTerm& t : f[y]) {
          CertTerm nt = t;
          nt.coeff *= conv;
          nt.factors.push_back({beta, y});
          next[y].push_back(std::move(nt));
        }
        for (const auto& cov : up[y]) {
          Rational a_z = Rational(cfg.a_int(W.act(P.rep(cov.w_pos), cfg.lambda())));
          Rational s = (a_beta / a_z) * Rational(dot(cfg.lambda(), W.pos_coroot(cov.root)));
          if (s == 0) continue;
          for (const CertTerm& t : f[cov.w_pos]) {
            CertTerm nt = t;
            nt.coeff *= s;
            next[y].push_back(std::move(nt));
          }
        }
      }
      f = std::move(next);
    }
    for (int y = 0; y < npts; ++y)
      for (CertTerm& t : f[y]) {
        t.coeff *= b_coeff;
        if (t.coeff == 0) continue;
        out[y].terms.push_back(std::move(t));
      }
  }
  return out;
}

struct CertCheck {
  bool ok = true;
  std::string violation;
};

// (i) exact identity, (ii) positive coefficients, (iii) per-term distinct
// roots, (iv) basepoints inside S(u,v;w) = {x : w <= x <= u, x <= v}.
inline CertCheck verify_certificate(const WeightedConfig<Rational>& cfg,
                                    const Certificate& cert, const Poly<Rational>& claimed,
                                    int u_pos, int v_pos, int w_pos) {
  CertCheck res;
  std::vector<int> allowed = cfg.P().interval_intersection(u_pos, v_pos, w_pos);
  Poly<Rational> sum(cfg.rank());
  for (const CertTerm& t : cert.terms) {
    if (!(t.coeff > 0)) return {false, "nonpositive coefficient"};
    std::vector<IVec> seen;
    for (const CertFactor& fct : t.factors) {
      if (std::find(seen.begin(), seen.end(), fct.root) != seen.end())
        return {false, "repeated root in a term"};
      seen.push_back(fct.root);
      if (std::find(allowed.begin(), allowed.end(), fct.x_pos) == allowed.end())
        return {false, "basepoint outside the allowed interval"};
    }
    Poly<Rational> mono = Poly<Rational>::constant(cfg.rank(), t.coeff);
    for (const CertFactor& fct : t.factors)
      mono = mono *
             Poly<Rational>::from_linear(weighted_root(cfg, fct.root, cfg.P().rep(fct.x_pos)));
    sum = sum + mono;
  }
  if (!(sum == claimed)) return {false, "certificate does not evaluate to the claimed value"};
  return res;
}

// End-to-end Theorem 1.1 pipeline for one product: decompose the non-weighted
// constants (chi_0 engine), re-expand in the weighted basis, and verify each
// resulting certificate against the weighted structure constants.
struct ProductCertificates {
  bool all_ok = true;
  std::string diagnostic;
  std::vector<Certificate> certs;          // per coset position
  std::vector<Poly<Rational>> coeffs;      // weighted d_{uv}^w, plain basis
};

inline ProductCertificates certify_product(SchubertCalc<Rational>& weighted,
                                           SchubertCalc<Rational>& classical,
                                           int u_pos, int v_pos) {
  ProductCertificates out;
  const WeightedConfig<Rational>& cfg = weighted.cfg();
  int npts = weighted.npts();
  out.certs.resize(npts);
  std::vector<IVec> negroots;
  for (int g = 0; g < cfg.W().num_positive(); ++g) {
    IVec r = cfg.W().pos_root(g);
    for (auto& c : r) c = -c;
    negroots.push_back(std::move(r));
  }

  SchubertExpansion<Rational> base = classical.structure_constants(u_pos, v_pos, false);
  for (int w = 0; w < npts; ++w) {
    if (base.coeff[w].is_zero()) continue;
    SquarefreeDecomposition dec = squarefree_decompose(base.coeff[w], negroots);
    if (!dec.feasible) {
      out.all_ok = false;
      out.diagnostic = "no square-free decomposition: contradicts Graham positivity";
      return out;
    }
    std::vector<Certificate> parts = reexpand_weighted(cfg, dec, w, true);
    for (int y = 0; y < npts; ++y)
      for (CertTerm& t : parts[y].terms) out.certs[y].terms.push_back(std::move(t));
  }

  out.coeffs = weighted.structure_constants(u_pos, v_pos, false).coeff;
  for (int y = 0; y < npts; ++y) {
    CertCheck chk = verify_certificate(cfg, out.certs[y], out.coeffs[y], u_pos, v_pos, y);
    if (!chk.ok) {
      out.all_ok = false;
      out.diagnostic = chk.violation;
      return out;
    }
  }
  return out;
}

}  // namespace wschub
