#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/rational.hpp"

namespace wschub {

// Rational function num / prod(den factors), all over Q in a fixed set of
// parameter variables. Denominators are kept factored: every factor that
// enters does so as an explicit polynomial (pivots, linear parameter forms),
// so cancellation by trial exact division keeps sizes tame without a general
// multivariate gcd. Equality is decided by cross multiplication and is
// independent of how far a value happens to be reduced.
//
// Pure constants are carried with arity 0 and coerced on contact, so the
// generic polynomial code can say K(1) without knowing the parameter count.
class RatFunc {
 public:
  RatFunc() : num_(0) {}
  RatFunc(int c) : num_(Poly<Rational>::constant(0, Rational(c))) {}
  RatFunc(const Rational& c) : num_(Poly<Rational>::constant(0, c)) {}
  explicit RatFunc(Poly<Rational> p) : num_(std::move(p)) {}

  static RatFunc variable(int nvars, int i) {
    return RatFunc(Poly<Rational>::variable(nvars, i));
  }

  static RatFunc constant(int nvars, const Rational& c) {
    return RatFunc(Poly<Rational>::constant(nvars, c));
  }

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  const Poly<Rational>& num() const { return num_; }
  const std::vector<Poly<Rational>>& den() const { return den_; }

  bool is_constant() const {
    return den_.empty() && (num_.is_zero() || num_.total_degree() == 0);
  }

  // Valid only when the value is a plain rational constant.
  Rational as_rational() const {
    if (!is_constant()) throw std::domain_error("not a constant: " + str());
    return num_.is_zero() ? Rational(0) : num_.terms().begin()->second;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    auto [a, b] = coerce(x, y);
    auto [shared, ra, rb] = split_dens(a.den_, b.den_);
    RatFunc r;
    r.num_ = a.num_ * prod(rb, a.nvars()) + b.num_ * prod(ra, a.nvars());
    r.den_ = shared;
    r.den_.insert(r.den_.end(), ra.begin(), ra.end());
    r.den_.insert(r.den_.end(), rb.begin(), rb.end());
    r.reduce();
    return r;
  }

  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + RatFunc(-1) * y; }
  friend RatFunc operator-(const RatFunc& x) { return RatFunc(-1) * x; }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    auto [a, b] = coerce(x, y);
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    r.reduce();
    return r;
  }

  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    auto [a, b] = coerce(x, y);
    if (b.is_zero()) throw std::domain_error("division by zero");
    RatFunc inv;
    inv.num_ = prod(b.den_, b.nvars());
    if (b.num_.total_degree() == 0) {
      inv.num_ = Rational(1) / b.num_.terms().begin()->second * inv.num_;
    } else {
      inv.den_.push_back(b.num_);
    }
    RatFunc r = a * inv;
    return r;
  }

  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    auto [a, b] = coerce(x, y);
    return a.num_ * prod(b.den_, a.nvars()) == b.num_ * prod(a.den_, a.nvars());
  }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  Rational evaluate(const std::vector<Rational>& at) const {
    Rational v = num_.evaluate(at);
    for (const auto& f : den_) {
      Rational d = f.evaluate(at);
      if (d == 0) throw std::domain_error("denominator vanishes at sample point");
      v /= d;
    }
    return v;
  }

  std::string str(const std::string& stem = "a") const {
    std::ostringstream os;
    os << "(" << num_.str(stem) << ")";
    for (const auto& f : den_) os << "/(" << f.str(stem) << ")";
    return os.str();
  }

 private:
  // Cancel denominator factors dividing the numerator, make factors monic.
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    std::vector<Poly<Rational>> kept;
    for (auto& f : den_) {
      if (f.total_degree() == 0) {
        num_ = Rational(1) / f.terms().begin()->second * num_;
        continue;
      }
      if (auto q = exact_divide(num_, f)) {
        num_ = *q;
      } else {
        Rational lc = f.terms().rbegin()->second;
        if (lc != 1) {
          f = Rational(1) / lc * f;
          num_ = Rational(1) / lc * num_;
        }
        kept.push_back(std::move(f));
      }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
      if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
      return a.str() < b.str();
    });
    den_ = std::move(kept);
  }

  static Poly<Rational> prod(const std::vector<Poly<Rational>>& fs, int nvars) {
    Poly<Rational> p = Poly<Rational>::constant(nvars, 1);
    for (const auto& f : fs) p = p * f;
    return p;
  }

  static std::tuple<std::vector<Poly<Rational>>, std::vector<Poly<Rational>>,
                    std::vector<Poly<Rational>>>
  split_dens(std::vector<Poly<Rational>> da, std::vector<Poly<Rational>> db) {
    std::vector<Poly<Rational>> shared;
    for (auto& f : da) {
      auto it = std::find(db.begin(), db.end(), f);
      if (it != db.end()) {
        shared.push_back(f);
        db.erase(it);
        f = Poly<Rational>();  // mark
      }
    }
    std::vector<Poly<Rational>> ra;
    for (auto& f : da)
      if (f.nvars() != 0 || !f.is_zero()) ra.push_back(std::move(f));
    return {shared, ra, db};
  }

  RatFunc lifted(int nvars) const {
    if (this->nvars() == nvars) return *this;
    if (!is_constant()) throw std::invalid_argument("parameter arity mismatch");
    return constant(nvars, num_.is_zero() ? Rational(0) : num_.terms().begin()->second);
  }

  static std::pair<RatFunc, RatFunc> coerce(const RatFunc& a, const RatFunc& b) {
    if (a.nvars() == b.nvars()) return {a, b};
    if (a.nvars() == 0) return {a.lifted(b.nvars()), b};
    if (b.nvars() == 0) return {a, b.lifted(a.nvars())};
    throw std::invalid_argument("parameter arity mismatch");
  }

  Poly<Rational> num_;
  std::vector<Poly<Rational>> den_;
};

}  // namespace wschub
