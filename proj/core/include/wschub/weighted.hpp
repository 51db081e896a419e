#pragma once

#include <memory>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/ratfunc.hpp"
#include "wschub/rational.hpp"
#include "wschub/rootdata.hpp"

namespace wschub {

struct ConfigReport {
  bool lambda_dominant = false;
  bool parabolic_matches = false;  // J equals the set of simples orthogonal to lambda
  bool chi_antidominant = false;
  bool all_aw_nonzero = false;
  bool all_aw_positive = false;
  bool lambda_off_root_span = false;  // root_coeffs(lambda) has no solution
  bool negroot_basis_independent = false;
  bool valid() const { return lambda_dominant && parabolic_matches && all_aw_nonzero; }
};

// The weighting data (lambda, chi, parabolic) over a coefficient field K.
// K = Rational is the numeric mode with an integer cocharacter; K = RatFunc
// treats the cocharacter entries a_0..a_m as free parameters (gcd(chi) = 1
// and all q_w = 1, the generic situation).
template <class K>
class WeightedConfig {
 public:
  static constexpr bool numeric = std::is_same_v<K, Rational>;

  static WeightedConfig make_numeric(std::shared_ptr<const WeylGroup> group,
                                     std::shared_ptr<const ParabolicCosets> cosets,
                                     IVec lambda, IVec chi)
    requires numeric
  {
    WeightedConfig c(std::move(group), std::move(cosets), std::move(lambda));
    if ((int)chi.size() != c.rank()) throw std::invalid_argument("cocharacter dimension");
    c.chi_int_ = std::move(chi);
    std::vector<Int> entries;
    for (long x : c.chi_int_) entries.push_back(Int((long)x));
    c.gcd_chi_ = gcd(entries);
    if (c.gcd_chi_ == 0) throw std::invalid_argument("zero cocharacter");
    for (long x : c.chi_int_)
      c.chi_.push_back(Rational(Int((long)x)) / Rational(c.gcd_chi_));
    c.finish();
    return c;
  }

  static WeightedConfig make_symbolic(std::shared_ptr<const WeylGroup> group,
                                      std::shared_ptr<const ParabolicCosets> cosets,
                                      IVec lambda)
    requires std::is_same_v<K, RatFunc>
  {
    WeightedConfig c(std::move(group), std::move(cosets), std::move(lambda));
    for (int i = 0; i < c.rank(); ++i) c.chi_.push_back(RatFunc::variable(c.rank(), i));
    c.finish();
    return c;
  }

  const WeylGroup& W() const { return *group_; }
  const ParabolicCosets& P() const { return *cosets_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  std::shared_ptr<const ParabolicCosets> cosets_ptr() const { return cosets_; }
  const IVec& lambda() const { return lambda_; }
  int rank() const { return group_->datum().rank; }
  const IVec& chi_int() const
    requires numeric
  {
    return chi_int_;
  }
  const Int& gcd_chi() const
    requires numeric
  {
    return gcd_chi_;
  }

  K a_of(const IVec& mu) const {
    K s{};
    for (int i = 0; i < rank(); ++i)
      if (mu[i] != 0) s = s + K(Rational((long)mu[i])) * chi_[i];
    return s;
  }

  // a_{w lambda}, cached over the full group
  const K& a_elem(int w) const { return a_elem_[w]; }

  // Normalized integer pairing gcd(chi)^{-1} mu . chi
  Int a_int(const IVec& mu) const
    requires numeric
  {
    Int s = 0;
    for (int i = 0; i < rank(); ++i) s += Int((long)mu[i]) * Int((long)chi_int_[i]);
    return s / gcd_chi_;
  }

  // mu - (a_mu / a_w) w lambda, a linear form vanishing on chi
  LinForm<K> bar(const IVec& mu, int w) const {
    K f = a_of(mu) / a_elem_[w];
    IVec wl = group_->act(w, lambda_);
    LinForm<K> out(rank());
    for (int i = 0; i < rank(); ++i)
      out[i] = K(Rational((long)mu[i])) - f * K(Rational((long)wl[i]));
    return out;
  }

  // Substitution images of the bar projection at w: x_i -> x_i - (a_i/a_w)(w lambda)_i.
  std::vector<LinForm<K>> bar_images(int w) const {
    std::vector<LinForm<K>> imgs;
    IVec e(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
      e[i] = 1;
      imgs.push_back(bar(e, w));
      e[i] = 0;
    }
    return imgs;
  }

  // q_w for a coset position; identically 1 in symbolic mode.
  const K& q(int pos) const { return q_.at(pos); }

  // {bar(beta_i, w)} for the negative simple roots beta_i = -alpha_i
  std::vector<LinForm<K>> negroot_basis(int w) const {
    std::vector<LinForm<K>> basis;
    for (const auto& alpha : group_->datum().simple_roots) {
      IVec beta = alpha;
      for (auto& x : beta) x = -x;
      basis.push_back(bar(beta, w));
    }
    return basis;
  }

  ConfigReport report() const { return report_; }

 private:
  WeightedConfig(std::shared_ptr<const WeylGroup> group,
                 std::shared_ptr<const ParabolicCosets> cosets, IVec lambda)
      : group_(std::move(group)), cosets_(std::move(cosets)), lambda_(std::move(lambda)) {
    if ((int)lambda_.size() != rank()) throw std::invalid_argument("weight dimension");
  }

  void finish();

  std::shared_ptr<const WeylGroup> group_;
  std::shared_ptr<const ParabolicCosets> cosets_;
  IVec lambda_;
  std::vector<K> chi_;  // normalized by gcd(chi) in numeric mode
  IVec chi_int_;
  Int gcd_chi_ = 1;
  std::vector<K> a_elem_;
  std::vector<K> q_;
  ConfigReport report_;
};

// gcd({a_w} u {a_beta : beta in Phi_w^P}) on the un-normalized integers,
// divided by gcd(chi) at the end.
inline Int stabilizer_order(const WeightedConfig<Rational>& cfg, int pos) {
  const WeylGroup& W = cfg.W();
  int w = cfg.P().rep(pos);
  Int dotl = 0;
  IVec wl = W.act(w, cfg.lambda());
  for (int i = 0; i < cfg.rank(); ++i) dotl += Int((long)wl[i]) * Int((long)cfg.chi_int()[i]);
  std::vector<Int> vals{dotl};
  for (int g : cfg.P().inversion_set_P(pos)) {
    Int d = 0;
    for (int i = 0; i < cfg.rank(); ++i)
      d += Int((long)W.pos_root(g)[i]) * Int((long)cfg.chi_int()[i]);
    vals.push_back(d);
  }
  return gcd(vals) / cfg.gcd_chi();
}

template <class K>
void WeightedConfig<K>::finish() {
  const WeylGroup& W = *group_;
  const RootDatum& d = W.datum();

  report_.lambda_dominant = true;
  std::vector<int> orthogonal;
  for (int i = 0; i < d.num_simple(); ++i) {
    long p = dot(lambda_, d.simple_coroots[i]);
    if (p < 0) report_.lambda_dominant = false;
    if (p == 0) orthogonal.push_back(i);
  }
  report_.parabolic_matches = (orthogonal == cosets_->J());
  report_.lambda_off_root_span = !W.root_coeffs(lambda_).has_value();

  for (int w = 0; w < W.size(); ++w) a_elem_.push_back(a_of(W.act(w, lambda_)));

  if constexpr (numeric) {
    report_.chi_antidominant = true;
    for (int g = 0; g < W.num_positive(); ++g)
      if (dot(W.pos_root(g), chi_int_) > 0) report_.chi_antidominant = false;
    report_.all_aw_nonzero = true;
    report_.all_aw_positive = true;
    for (int w = 0; w < W.size(); ++w) {
      if (a_elem_[w] == 0) report_.all_aw_nonzero = false;
      if (a_elem_[w] <= 0) report_.all_aw_positive = false;
    }
    if (!report_.all_aw_nonzero)
      throw std::invalid_argument("some a_w vanishes; bar maps are undefined");
    if (report_.all_aw_positive) {
      Int d0 = stabilizer_order(*this, 0);
      for (int pos = 0; pos < cosets_->num_reps(); ++pos) {
        Int s = stabilizer_order(*this, pos);
        if (s % d0 != 0) throw std::runtime_error("q_w is not an integer");
        Rational qw = Rational(s) / Rational(d0);
        if (qw <= 0) throw std::runtime_error("q_w is not positive");
        q_.push_back(qw);
      }
    }
  } else {
    report_.chi_antidominant = true;  // formal parameters: vacuous
    report_.all_aw_nonzero = true;
    report_.all_aw_positive = true;
    for (int w = 0; w < W.size(); ++w)
      if (a_elem_[w].is_zero())
        throw std::invalid_argument("a_w vanishes identically in the parameters");
    q_.assign(cosets_->num_reps(), K(1));
  }

  // canonical coordinates on the weighted-root space: {bar(beta_i, w0)}
  auto basis = negroot_basis(W.longest());
  int n = d.num_simple();
  std::vector<LinForm<K>> rows = basis;
  int rank_count = 0;
  for (int col = 0, row = 0; col < rank() && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (!(rows[r][col] == K())) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[row]);
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      K f = rows[r][col] / rows[row][col];
      for (int c = 0; c < rank(); ++c) rows[r][c] = rows[r][c] - f * rows[row][c];
    }
    ++row;
    ++rank_count;
  }
  report_.negroot_basis_independent = (rank_count == n);
  if (!report_.negroot_basis_independent && report_.valid() && report_.all_aw_positive)
    throw std::runtime_error("weighted negative simple roots are linearly dependent");
}

inline Rational q_of(const WeightedConfig<Rational>& cfg, int pos) { return cfg.q(pos); }

// (a_w beta - a_beta w lambda) / gcd(a_w, a_beta), an integral form
inline LinForm<Rational> weighted_root(const WeightedConfig<Rational>& cfg, const IVec& beta,
                                       int w) {
  Int aw = cfg.a_int(cfg.W().act(w, cfg.lambda()));
  Int ab = cfg.a_int(beta);
  Int g = gcd(aw, ab);
  if (g == 0) throw std::domain_error("weighted root of a zero pairing");
  IVec wl = cfg.W().act(w, cfg.lambda());
  LinForm<Rational> out(cfg.rank());
  for (int i = 0; i < cfg.rank(); ++i)
    out[i] = Rational(aw * Int((long)beta[i]) - ab * Int((long)wl[i])) / Rational(g);
  return out;
}

// (a_beta alpha - a_alpha beta) / gcd(a_alpha, a_beta), sign flipped if a_beta < 0
inline LinForm<Rational> quotient_weight(const WeightedConfig<Rational>& cfg, const IVec& alpha,
                                         const IVec& beta) {
  Int aa = cfg.a_int(alpha);
  Int ab = cfg.a_int(beta);
  if (aa == 0 || ab == 0) throw std::domain_error("quotient weight needs nonzero pairings");
  Int g = gcd(aa, ab);
  Rational sgn = (ab < 0) ? Rational(-1) : Rational(1);
  LinForm<Rational> out(cfg.rank());
  for (int i = 0; i < cfg.rank(); ++i)
    out[i] = sgn * Rational(ab * Int((long)alpha[i]) - aa * Int((long)beta[i])) / Rational(g);
  return out;
}

struct StabDivisibility {
  Int at_w;        // gcd(a_w, a_{Phi_w^P})
  Int below_w;     // gcd(a_x : x <=_P w)
  bool divides;    // at_w | below_w
  bool equal;
};

inline bool is_minuscule(const WeylGroup& W, const IVec& lambda) {
  for (int g = 0; g < W.num_positive(); ++g) {
    long p = dot(lambda, W.pos_coroot(g));
    if (p < -1 || p > 1) return false;
  }
  return true;
}

inline StabDivisibility stab_divisibility(const WeightedConfig<Rational>& cfg, int pos) {
  Int lhs = stabilizer_order(cfg, pos);
  std::vector<Int> below;
  for (int x = 0; x < cfg.P().num_reps(); ++x)
    if (cfg.P().leq(x, pos)) below.push_back(numerator(cfg.a_elem(cfg.P().rep(x))));
  Int rhs = gcd(below);
  bool div = (rhs % lhs) == 0;
  if (!div) throw std::runtime_error("stabilizer divisibility violated");
  return {lhs, rhs, div, lhs == rhs};
}

// Coefficients c with bar(beta, v) = sum c_i bar(beta_i, w), via
// bar(beta, v) = bar(beta, w) + (a_beta / a_v) sum e_i bar(beta_i, w)
// where w lambda - v lambda = sum e_i beta_i over the negative simple roots.
template <class K>
std::vector<K> rebase(const WeightedConfig<K>& cfg, const IVec& beta, int v, int w) {
  const WeylGroup& W = cfg.W();
  IVec diff = W.act(w, cfg.lambda());
  IVec vl = W.act(v, cfg.lambda());
  for (int i = 0; i < cfg.rank(); ++i) diff[i] -= vl[i];
  auto alpha_coeffs = W.root_coeffs(diff);
  if (!alpha_coeffs) throw std::domain_error("w lambda - v lambda outside the root span");
  auto beta_coeffs = W.root_coeffs(beta);
  if (!beta_coeffs) throw std::domain_error("beta outside the root span");
  K factor = cfg.a_of(beta) / cfg.a_elem(v);
  int n = W.datum().num_simple();
  std::vector<K> out(n);
  for (int i = 0; i < n; ++i) {
    // negate: expansions are over the negative simple roots
    Rational e_i = -(*alpha_coeffs)[i];
    Rational d_i = -(*beta_coeffs)[i];
    out[i] = K(d_i) + factor * K(e_i);
  }
  return out;
}

}  // namespace wschub
