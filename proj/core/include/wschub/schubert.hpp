#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/rational.hpp"
#include "wschub/rootdata.hpp"
#include "wschub/weighted.hpp"

namespace wschub {

inline LinForm<Rational> to_linform(const IVec& v) {
  LinForm<Rational> f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) f[i] = Rational((long)v[i]);
  return f;
}

// Billey restriction xi^v|_u for the full flag variety: sum, over subwords of
// the reduced word of u that are reduced words of v, of the products of the
// prefix-reflected simple roots r_j = s_{b_1}...s_{b_{j-1}}(alpha_{b_j}).
inline Poly<Rational> billey_restrict(const WeylGroup& W, int v,
                                      const std::vector<int>& word) {
  int rank = W.datum().rank;
  int lv = W[v].length;
  int l = (int)word.size();
  std::vector<Poly<Rational>> rj(l, Poly<Rational>(rank));
  {
    int prefix = W.identity();
    for (int j = 0; j < l; ++j) {
      rj[j] = Poly<Rational>::from_linear(
          to_linform(W.act(prefix, W.datum().simple_roots[word[j]])));
      prefix = W.mult(prefix, W.simple(word[j]));
    }
  }
  Poly<Rational> total(rank);
  auto rec = [&](auto&& self, int j, int e, const Poly<Rational>& prod) -> void {
    int le = W[e].length;
    if (le == lv) {
      // no further letters may be taken; every completion skips the rest
      if (e == v) total = total + prod;
      return;
    }
    if (le + (l - j) < lv) return;
    if (!W.bruhat_leq(e, v)) return;
    if (j == l) return;
    self(self, j + 1, e, prod);
    int e2 = W.mult(e, W.simple(word[j]));
    if (W[e2].length == le + 1) self(self, j + 1, e2, prod * rj[j]);
  };
  rec(rec, 0, W.identity(), Poly<Rational>::constant(rank, 1));
  return total;
}

// i_x^* of the non-weighted class of Y_w = closure(B.wP), w and x maximal
// coset representatives. Computed by dualizing both arguments with w_0 and
// mapping the Billey value back; the convention is pinned by fixtures.
inline Poly<Rational> restrict_nonweighted(const WeylGroup& W, const ParabolicCosets& P,
                                           int w_pos, int x_pos) {
  int w0 = W.longest();
  int v = W.mult(w0, P.rep(w_pos));
  int u = W.mult(w0, P.rep(x_pos));
  Poly<Rational> b = billey_restrict(W, v, W[u].word);
  std::vector<LinForm<Rational>> img;
  IVec e(W.datum().rank, 0);
  for (int i = 0; i < W.datum().rank; ++i) {
    e[i] = 1;
    img.push_back(to_linform(W.act(w0, e)));
    e[i] = 0;
  }
  return substitute_linear(b, img);
}

// Diagonal restriction factored into primitive integral linear forms times a
// rational constant: the factors are w_0-images of the inversions of w_0 w.
struct EulerFactors {
  std::vector<IVec> factors;
  Rational constant = 1;
};

inline EulerFactors euler_factors(const WeylGroup& W, const ParabolicCosets& P, int w_pos) {
  int w0 = W.longest();
  int v = W.mult(w0, P.rep(w_pos));
  EulerFactors out;
  const auto& word = W[v].word;
  int prefix = W.identity();
  for (int j = 0; j < (int)word.size(); ++j) {
    IVec r = W.act(prefix, W.datum().simple_roots[word[j]]);
    prefix = W.mult(prefix, W.simple(word[j]));
    IVec f = W.act(w0, r);
    Int g = 0;
    for (long c : f) g = gcd(g, Int(c));
    long scale = (long)g.get_si();
    for (long c : f)
      if (c != 0) {
        if (c < 0) scale = -scale;
        break;
      }
    for (auto& c : f) c /= scale;
    out.constant *= Rational(scale);
    out.factors.push_back(std::move(f));
  }
  return out;
}

// a_w beta - a_beta w lambda up to a positive constant: integral primitive in
// numeric mode, the un-normalized form in symbolic mode. Scaling is harmless
// because the form is only used as a divisor.
template <class K>
LinForm<K> weighted_root_form(const WeightedConfig<K>& cfg, const IVec& beta, int w) {
  if constexpr (WeightedConfig<K>::numeric) {
    return weighted_root(cfg, beta, w);
  } else {
    K aw = cfg.a_elem(w);
    K ab = cfg.a_of(beta);
    IVec wl = cfg.W().act(w, cfg.lambda());
    LinForm<K> out(cfg.rank());
    for (int i = 0; i < cfg.rank(); ++i)
      out[i] = aw * K(Rational((long)beta[i])) - ab * K(Rational((long)wl[i]));
    return out;
  }
}

// Localized class: one canonical lift per coset, indexed by coset position.
template <class K>
struct GKMClass {
  std::vector<Poly<K>> values;

  friend bool operator==(const GKMClass& a, const GKMClass& b) {
    return a.values == b.values;
  }
};

template <class K>
struct SchubertExpansion {
  std::vector<Poly<K>> coeff;  // per coset position
  bool weighted = true;        // delta^T basis when set, delta^H otherwise

  friend bool operator==(const SchubertExpansion& a, const SchubertExpansion& b) {
    return a.weighted == b.weighted && a.coeff == b.coeff;
  }
};

struct GKMViolation {
  int x_pos;
  int y_pos;
  int root;  // positive root index of the offending edge
};

// A fundamental coweight pairing: the rational solution of
// omega . beta_j^vee = delta_{alpha,j}, returned as (nu, den) with omega = nu/den.
inline std::pair<IVec, long> find_omega(const WeylGroup& W, int alpha) {
  const RootDatum& d = W.datum();
  int n = d.num_simple(), m = d.rank;
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(m + 1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) A[j][i] = Rational((long)d.simple_coroots[j][i]);
    A[j][m] = (j == alpha) ? 1 : 0;
  }
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (A[r][col] != 0) {
        p = r;
        break;
    }
    if (p < 0) continue;
    std::swap(A[p], A[row]);
    for (int r = 0; r < n; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rational f = A[r][col] / A[row][col];
      for (int c = col; c <= m; ++c) A[r][c] -= f * A[row][c];
    }
    pivot_col[row++] = col;
  }
  for (int r = row; r < n; ++r)
    if (A[r][m] != 0) throw std::runtime_error("coroots admit no dual weight");
  std::vector<Rational> x(m, 0);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = A[r][m] / A[r][pivot_col[r]];
  Int den = 1;
  for (const auto& xi : x) den = lcm(den, Int(xi.get_den()));
  IVec nu(m);
  for (int i = 0; i < m; ++i)
    nu[i] = (long)Int(x[i].get_num() * (den / x[i].get_den())).get_si();
  return {nu, (long)den.get_si()};
}

// Restrictions, products, basis expansions and the Chevalley-type formulas
// for one weighted configuration. Memoizes per-class data; every closed-form
// operation re-verifies itself against the localized product and throws on
// disagreement.
template <class K>
class SchubertCalc {
 public:
  explicit SchubertCalc(WeightedConfig<K> cfg) : cfg_(std::move(cfg)) {
    int n = cfg_.P().num_reps();
    bar_imgs_.reserve(n);
    for (int x = 0; x < n; ++x) bar_imgs_.push_back(cfg_.bar_images(cfg_.P().rep(x)));
    euler_.resize(n);
    class_plain_.resize(n);
    class_weighted_.resize(n);
  }

  const WeightedConfig<K>& cfg() const { return cfg_; }
  const WeylGroup& W() const { return cfg_.W(); }
  const ParabolicCosets& P() const { return cfg_.P(); }
  int npts() const { return P().num_reps(); }
  int rank() const { return cfg_.rank(); }

  const Poly<Rational>& plain_restrict(int w_pos, int x_pos) {
    auto key = std::make_pair(w_pos, x_pos);
    auto it = restr_.find(key);
    if (it == restr_.end())
      it = restr_.emplace(key, restrict_nonweighted(W(), P(), w_pos, x_pos)).first;
    return it->second;
  }

  const EulerFactors& euler(int w_pos) {
    if (!euler_[w_pos]) euler_[w_pos] = euler_factors(W(), P(), w_pos);
    return *euler_[w_pos];
  }

  // Canonical lift of j_x^* of the class of w; the weighted basis carries q_w.
  Poly<K> restrict_at(int w_pos, int x_pos, bool weighted) {
    Poly<K> r = substitute_linear(lift(plain_restrict(w_pos, x_pos)), bar_imgs_[x_pos]);
    if (weighted) r = cfg_.q(w_pos) * r;
    return r;
  }

  const GKMClass<K>& schubert_class(int w_pos, bool weighted) {
    auto& slot = weighted ? class_weighted_[w_pos] : class_plain_[w_pos];
    if (!slot) {
      GKMClass<K> c;
      for (int x = 0; x < npts(); ++x) c.values.push_back(restrict_at(w_pos, x, weighted));
      slot = std::move(c);
    }
    return *slot;
  }

  // The tuple of a base-ring scalar mu/den: bar(mu, x)/den at each point.
  GKMClass<K> scalar_class(const IVec& mu, long den = 1) {
    GKMClass<K> c;
    K d = K(Rational(1) / Rational(den));
    for (int x = 0; x < npts(); ++x) {
      LinForm<K> b = cfg_.bar(mu, P().rep(x));
      for (auto& v : b) v = d * v;
      c.values.push_back(Poly<K>::from_linear(b));
    }
    return c;
  }

  // First Chern class of the line bundle of a W_P-invariant weight mu/den:
  // value bar(x mu, x)/den at the point x.
  GKMClass<K> line_bundle_class(const IVec& mu, long den = 1) {
    for (int j : P().J())
      if (dot(mu, W().datum().simple_coroots[j]) != 0)
        throw std::invalid_argument("line bundle weight is not W_P-invariant");
    GKMClass<K> c;
    K d = K(Rational(1) / Rational(den));
    for (int x = 0; x < npts(); ++x) {
      int xr = P().rep(x);
      LinForm<K> b = cfg_.bar(W().act(xr, mu), xr);
      for (auto& v : b) v = d * v;
      c.values.push_back(Poly<K>::from_linear(b));
    }
    return c;
  }

  GKMClass<K> canonicalize(const GKMClass<K>& c) {
    GKMClass<K> out;
    for (int x = 0; x < npts(); ++x)
      out.values.push_back(substitute_linear(c.values[x], bar_imgs_[x]));
    return out;
  }

  GKMClass<K> multiply(const GKMClass<K>& a, const GKMClass<K>& b) {
    GKMClass<K> out;
    for (int x = 0; x < npts(); ++x)
      out.values.push_back(substitute_linear(a.values[x] * b.values[x], bar_imgs_[x]));
    return out;
  }

  // Divisibility of value differences by the weighted root, over the curves
  // given by alpha in x Phi(u^-).
  std::optional<GKMViolation> gkm_check(const GKMClass<K>& c) {
    for (int x = 0; x < npts(); ++x) {
      int xr = P().rep(x);
      int xinv = W().inverse(xr);
      for (int g = 0; g < W().num_positive(); ++g) {
        IVec beta = W().act(xinv, W().pos_root(g));
        int s = W().signed_root_index(beta);
        if (P().levi_root(std::abs(s) - 1)) continue;
        int y = P().rep_pos(W().mult(W().reflection_of(g), xr));
        if (y <= x) continue;
        Poly<K> diff = c.values[x] - c.values[y];
        if (diff.is_zero()) continue;
        auto form = Poly<K>::from_linear(weighted_root_form(cfg_, W().pos_root(g), xr));
        if (!exact_divide(diff, form)) return GKMViolation{x, y, g};
      }
    }
    return std::nullopt;
  }

  // Restriction of f (x) g in the Borel presentation: f . x(g), canonicalized
  // at x (which reduces modulo x lambda).
  Poly<K> borel_restrict(const Poly<Rational>& f, const Poly<Rational>& g, int x_pos) {
    int xr = P().rep(x_pos);
    std::vector<LinForm<Rational>> img;
    IVec e(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
      e[i] = 1;
      img.push_back(to_linform(W().act(xr, e)));
      e[i] = 0;
    }
    Poly<Rational> prod = f * substitute_linear(g, img);
    return substitute_linear(lift(prod), bar_imgs_[x_pos]);
  }

  // Greedy triangular sweep: cosets are stored in decreasing (length, word)
  // order, so each step clears one maximal support point by exact division
  // by the diagonal Euler factors.
  SchubertExpansion<K> expand(GKMClass<K> c, bool weighted) {
    SchubertExpansion<K> out;
    out.weighted = weighted;
    out.coeff.assign(npts(), Poly<K>(rank()));
    for (int pos = 0; pos < npts(); ++pos) {
      if (c.values[pos].is_zero()) continue;
      const EulerFactors& ef = euler(pos);
      Poly<K> q = c.values[pos];
      for (const IVec& f : ef.factors)
        q = exact_divide_linear(q, cfg_.bar(f, P().rep(pos)));
      K scale = K(1) / (weighted ? K(ef.constant) * cfg_.q(pos) : K(ef.constant));
      q = scale * q;
      const GKMClass<K>& base = schubert_class(pos, weighted);
      for (int x = 0; x < npts(); ++x) c.values[x] = c.values[x] - q * base.values[x];
      out.coeff[pos] = std::move(q);
    }
    for (int x = 0; x < npts(); ++x)
      if (!c.values[x].is_zero())
        throw std::domain_error("expand: nonzero residual, not a Schubert combination");
    return out;
  }

  GKMClass<K> embed(const SchubertExpansion<K>& e) {
    GKMClass<K> out;
    out.values.assign(npts(), Poly<K>(rank()));
    for (int w = 0; w < npts(); ++w) {
      if (e.coeff[w].is_zero()) continue;
      const GKMClass<K>& base = schubert_class(w, e.weighted);
      for (int x = 0; x < npts(); ++x)
        out.values[x] = out.values[x] + e.coeff[w] * base.values[x];
    }
    return out;
  }

  SchubertExpansion<K> structure_constants(int u_pos, int v_pos, bool weighted) {
    return expand(multiply(schubert_class(u_pos, weighted), schubert_class(v_pos, weighted)),
                  weighted);
  }

  // (v lambda) delta^H_v = sum over covers of (lambda . gamma^vee) delta^H_w
  SchubertExpansion<K> lambda_multiply(int v_pos) {
    SchubertExpansion<K> out;
    out.weighted = false;
    out.coeff.assign(npts(), Poly<K>(rank()));
    for (const auto& cov : P().covers(v_pos))
      out.coeff[cov.w_pos] = out.coeff[cov.w_pos] +
          Poly<K>::constant(rank(), K(Rational(dot(cfg_.lambda(), W().pos_coroot(cov.root)))));
    int vr = P().rep(v_pos);
    verify(out, multiply(scalar_class(W().act(vr, cfg_.lambda())), schubert_class(v_pos, false)),
           "lambda_multiply");
    return out;
  }

  // mu delta^T_v = bar(mu,v) delta_v + (a_mu/a_v) sum (q_v/q_w)(lambda.gamma^vee) delta_w
  SchubertExpansion<K> chevalley_mu(const IVec& mu, int v_pos) {
    SchubertExpansion<K> out;
    out.weighted = true;
    out.coeff.assign(npts(), Poly<K>(rank()));
    int vr = P().rep(v_pos);
    out.coeff[v_pos] = Poly<K>::from_linear(cfg_.bar(mu, vr));
    K ratio = cfg_.a_of(mu) / cfg_.a_elem(vr);
    for (const auto& cov : P().covers(v_pos)) {
      K coef = ratio * (cfg_.q(v_pos) / cfg_.q(cov.w_pos)) *
               K(Rational(dot(cfg_.lambda(), W().pos_coroot(cov.root))));
      out.coeff[cov.w_pos] = out.coeff[cov.w_pos] + Poly<K>::constant(rank(), coef);
    }
    verify(out, multiply(scalar_class(mu), schubert_class(v_pos, true)), "chevalley_mu");
    return out;
  }

  // (1 (x) mu~) delta^T_v = bar(v mu, v) delta_v
  //   + sum (q_v/q_w)((a_{v mu}/a_v) lambda - mu).gamma^vee delta_w
  SchubertExpansion<K> chevalley_line(const IVec& mu, int v_pos) {
    SchubertExpansion<K> out;
    out.weighted = true;
    out.coeff.assign(npts(), Poly<K>(rank()));
    int vr = P().rep(v_pos);
    IVec vmu = W().act(vr, mu);
    out.coeff[v_pos] = Poly<K>::from_linear(cfg_.bar(vmu, vr));
    K ratio = cfg_.a_of(vmu) / cfg_.a_elem(vr);
    for (const auto& cov : P().covers(v_pos)) {
      const IVec& gv = W().pos_coroot(cov.root);
      K coef = (cfg_.q(v_pos) / cfg_.q(cov.w_pos)) *
               (ratio * K(Rational(dot(cfg_.lambda(), gv))) - K(Rational(dot(mu, gv))));
      out.coeff[cov.w_pos] = out.coeff[cov.w_pos] + Poly<K>::constant(rank(), coef);
    }
    verify(out, multiply(line_bundle_class(mu), schubert_class(v_pos, true)), "chevalley_line");
    return out;
  }

  struct ChevalleyDivisor {
    int u_pos;  // coset of u_alpha = w_0 r_alpha
    SchubertExpansion<K> general;
    std::optional<SchubertExpansion<K>> cominuscule;  // when lambda = omega_alpha
    std::optional<SchubertExpansion<K>> rebased;      // same, in bar_i(w_0) coordinates
  };

  // delta^T_{u_alpha} delta^T_v, closed form plus the cominuscule variants,
  // all checked against the expanded localized product.
  ChevalleyDivisor chevalley_divisor(int alpha, int v_pos) {
    for (int j : P().J())
      if (j == alpha) throw std::invalid_argument("reflection lies in the parabolic subgroup");
    int w0 = W().longest();
    int u_pos = P().rep_pos(W().mult(w0, W().simple(alpha)));
    auto [nu, den] = find_omega(W(), alpha);
    Rational dinv = Rational(1) / Rational(den);
    int vr = P().rep(v_pos);
    K qua = cfg_.q(u_pos);

    ChevalleyDivisor out;
    out.u_pos = u_pos;
    out.general.weighted = true;
    out.general.coeff.assign(npts(), Poly<K>(rank()));
    IVec diff = W().act(w0, nu);
    IVec vnu = W().act(vr, nu);
    for (int i = 0; i < rank(); ++i) diff[i] -= vnu[i];
    {
      LinForm<K> b = cfg_.bar(diff, vr);
      for (auto& c : b) c = K(dinv) * c;
      out.general.coeff[v_pos] = qua * Poly<K>::from_linear(b);
    }
    K adiff = K(dinv) * cfg_.a_of(diff) / cfg_.a_elem(vr);
    for (const auto& cov : P().covers(v_pos)) {
      const IVec& gv = W().pos_coroot(cov.root);
      K coef = qua * (cfg_.q(v_pos) / cfg_.q(cov.w_pos)) *
               (adiff * K(Rational(dot(cfg_.lambda(), gv))) + K(dinv * Rational(dot(nu, gv))));
      out.general.coeff[cov.w_pos] = out.general.coeff[cov.w_pos] + Poly<K>::constant(rank(), coef);
    }
    verify(out.general, multiply(schubert_class(u_pos, true), schubert_class(v_pos, true)),
           "chevalley_divisor");

    bool lambda_is_omega = true;
    for (int j = 0; j < W().datum().num_simple(); ++j)
      if (dot(cfg_.lambda(), W().datum().simple_coroots[j]) != (j == alpha ? 1 : 0))
        lambda_is_omega = false;
    if (!lambda_is_omega) return out;

    K aw0_over_av = cfg_.a_elem(w0) / cfg_.a_elem(vr);

    SchubertExpansion<K> comin;
    comin.weighted = true;
    comin.coeff.assign(npts(), Poly<K>(rank()));
    comin.coeff[v_pos] = qua * Poly<K>::from_linear(cfg_.bar(W().act(w0, cfg_.lambda()), vr));
    for (const auto& cov : P().covers(v_pos)) {
      K coef = qua * (cfg_.q(v_pos) / cfg_.q(cov.w_pos)) * aw0_over_av *
               K(Rational(dot(cfg_.lambda(), W().pos_coroot(cov.root))));
      comin.coeff[cov.w_pos] = comin.coeff[cov.w_pos] + Poly<K>::constant(rank(), coef);
    }
    if (!(comin == out.general))
      throw std::runtime_error("chevalley_divisor: cominuscule form disagrees");
    out.cominuscule = std::move(comin);

    // w_0 lambda - v lambda = sum e_i beta_i over the negative simple roots
    IVec ldiff = W().act(w0, cfg_.lambda());
    IVec vlam = W().act(vr, cfg_.lambda());
    for (int i = 0; i < rank(); ++i) ldiff[i] -= vlam[i];
    auto coeffs = W().root_coeffs(ldiff);
    if (!coeffs) throw std::runtime_error("chevalley_divisor: weight step outside root span");
    SchubertExpansion<K> reb;
    reb.weighted = true;
    reb.coeff.assign(npts(), Poly<K>(rank()));
    Poly<K> diag(rank());
    for (int i = 0; i < W().datum().num_simple(); ++i) {
      IVec beta = W().datum().simple_roots[i];
      for (auto& c : beta) c = -c;
      diag = diag + K(-(*coeffs)[i]) * Poly<K>::from_linear(cfg_.bar(beta, w0));
    }
    reb.coeff[v_pos] = (qua * aw0_over_av) * diag;
    for (const auto& cov : P().covers(v_pos)) {
      K coef = qua * aw0_over_av * (cfg_.q(v_pos) / cfg_.q(cov.w_pos)) *
               K(Rational(dot(cfg_.lambda(), W().pos_coroot(cov.root))));
      reb.coeff[cov.w_pos] = reb.coeff[cov.w_pos] + Poly<K>::constant(rank(), coef);
    }
    if (!(reb == out.general))
      throw std::runtime_error("chevalley_divisor: rebased form disagrees");
    out.rebased = std::move(reb);
    return out;
  }

 private:
  Poly<K> lift(const Poly<Rational>& p) {
    return map_coeffs<K>(p, [](const Rational& c) { return K(c); });
  }

  void verify(const SchubertExpansion<K>& closed, const GKMClass<K>& product,
              const std::string& name) {
    SchubertExpansion<K> got = expand(product, closed.weighted);
    if (!(got == closed))
      throw std::runtime_error(name + ": closed form disagrees with the localized product");
  }

  WeightedConfig<K> cfg_;
  std::vector<std::vector<LinForm<K>>> bar_imgs_;
  std::map<std::pair<int, int>, Poly<Rational>> restr_;
  std::vector<std::optional<EulerFactors>> euler_;
  std::vector<std::optional<GKMClass<K>>> class_plain_;
  std::vector<std::optional<GKMClass<K>>> class_weighted_;
};

}  // namespace wschub
