#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wschub/rational.hpp"

namespace wschub {

using Mono = std::vector<int>;  // exponent vector

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded lexicographic order, ascending; map::rbegin() is the leading term.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Homogeneous degree-1 form, coefficients indexed by variable.
template <class K>
using LinForm = std::vector<K>;

template <class K>
class Poly {
 public:
  using Terms = std::map<Mono, K, GrlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const K& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
  }

  static Poly variable(int nvars, int i, const K& c = K(1)) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.add_term(m, c);
    return p;
  }

  static Poly from_linear(const LinForm<K>& f) {
    Poly p((int)f.size());
    for (int i = 0; i < (int)f.size(); ++i) {
      if (!(f[i] == K())) {
        Mono m(f.size(), 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), f[i]);
      }
    }
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Mono& m, const K& c) {
    if (c == K()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second == K()) terms_.erase(it);
    }
  }

  int total_degree() const {
    return terms_.empty() ? -1 : mono_degree(terms_.rbegin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K() : it->second;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_compat(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    check_compat(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, K() - c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_compat(a, b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  friend Poly operator*(const K& c, const Poly& a) {
    Poly r(a.nvars_);
    if (c == K()) return r;
    for (const auto& [m, cc] : a.terms_) r.add_term(m, c * cc);
    return r;
  }

  friend Poly operator-(const Poly& a) { return K(-1) * a; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(int e) const {
    Poly r = constant(nvars_, K(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Algebra map sending variable i to images[i]; images share a common
  // variable count which becomes the result's.
  Poly substitute(const std::vector<Poly>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("substitute: arity");
    int out_vars = images.empty() ? 0 : images[0].nvars_;
    Poly r(out_vars);
    for (const auto& [m, c] : terms_) {
      Poly t = constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * images[i].pow(m[i]);
      r = r + t;
    }
    return r;
  }

  K evaluate(const std::vector<K>& x) const {
    if ((int)x.size() != nvars_) throw std::invalid_argument("evaluate: arity");
    K r{};
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * x[i];
      r = r + t;
    }
    return r;
  }

  std::string str(const std::string& stem = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(it->second) << ")";
      for (int i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        os << "*" << stem << i;
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
    return os.str();
  }

 private:
  static void check_compat(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  }
  static std::string coeff_str(const Rational& c) { return rat_to_string(c); }
  template <class T>
  static std::string coeff_str(const T& c) { return c.str(); }

  int nvars_;
  Terms terms_;
};

// Quotient of a by b when it divides exactly, std::nullopt otherwise.
// Greedy leading-term cancellation in grlex order; since the order is
// multiplicative, divisibility fails exactly when some leading monomial of
// the running remainder is not divisible by b's.
template <class K>
std::optional<Poly<K>> exact_divide(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly<K> q(a.nvars());
  Poly<K> rem = a;
  const auto& lead_b = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms().rbegin();
    Mono m(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      m[i] = lead_r.first[i] - lead_b.first[i];
      if (m[i] < 0) return std::nullopt;
    }
    K c = lead_r.second / lead_b.second;
    Poly<K> t(a.nvars());
    t.add_term(m, c);
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

// Division by a nonzero linear form; throws if inexact.
template <class K>
Poly<K> exact_divide_linear(const Poly<K>& p, const LinForm<K>& f) {
  auto q = exact_divide(p, Poly<K>::from_linear(f));
  if (!q) throw std::domain_error("inexact division by linear form");
  return *q;
}

// Composition with the linear change of variables x_i -> images[i].
template <class K>
Poly<K> substitute_linear(const Poly<K>& p, const std::vector<LinForm<K>>& images) {
  std::vector<Poly<K>> imgs;
  imgs.reserve(images.size());
  for (const auto& f : images) imgs.push_back(Poly<K>::from_linear(f));
  return p.substitute(imgs);
}

// Coefficient-wise base change, e.g. Rational -> rational functions.
template <class K, class F>
Poly<K> map_coeffs(const Poly<Rational>& p, F conv) {
  Poly<K> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, conv(c));
  return r;
}

}  // namespace wschub
