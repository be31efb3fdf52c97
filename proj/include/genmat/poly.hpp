#pragma once

// Sparse multivariate polynomials over Rational with the pinned graded-lex
// term order.  Canonical form: no zero coefficients, terms keyed by Monomial
// in a std::map (ascending); serialization walks leading-term-first.

#include "genmat/monomial.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace genmat {

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) terms_[Monomial()] = c;
  }
  static Poly var(VarIndex v) { return monomial(Monomial::var(v), 1); }
  static Poly monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::int64_t degree() const {  // total degree; -1 for the zero polynomial
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  Poly operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // True when every term has the same h-layer multidegree d.
  bool is_multihomogeneous(std::size_t m, std::vector<std::int64_t>* d_out = nullptr) const {
    bool first = true;
    std::vector<std::int64_t> d;
    for (auto& [mon, c] : terms_) {
      auto md = mon.multidegree(m);
      if (first) { d = md; first = false; }
      else if (md != d) return false;
    }
    if (d_out && !first) *d_out = d;
    return true;
  }

  Rational eval(const std::function<Rational(const VarIndex&)>& point) const {
    Rational acc(0);
    for (auto& [mon, c] : terms_) {
      Rational t = c;
      for (auto& [v, e] : mon.terms()) {
        Rational x = point(v);
        for (std::int32_t k = 0; k < e; ++k) t *= x;
      }
      acc += t;
    }
    return acc;
  }

  // Simultaneous linear substitution of whole h-layers:
  //   x(j;a,b) |-> sum_i  coef[i][j] * x(i;a,b)      (coef is m x m, 0-based)
  // This is how the matrix group acts on everything downstream.
  Poly substitute_layers(const std::vector<std::vector<Rational>>& coef) const {
    std::size_t m = coef.size();
    Poly r;
    for (auto& [mon, c] : terms_) {
      Poly prod(c);
      for (auto& [v, e] : mon.terms()) {
        if (v.h < 1 || static_cast<std::size_t>(v.h) > m)
          throw std::invalid_argument("substitute_layers: variable layer out of range");
        Poly lin;
        for (std::size_t i = 0; i < m; ++i)
          lin += Poly::monomial(Monomial::var({static_cast<std::int32_t>(i + 1), v.i, v.j}),
                                coef[i][static_cast<std::size_t>(v.h - 1)]);
        for (std::int32_t k = 0; k < e; ++k) prod *= lin;
      }
      r += prod;
    }
    return r;
  }

  // Derivation determined by its values on variables (Leibniz extension).
  Poly derive(const std::function<Poly(const VarIndex&)>& on_var) const {
    Poly r;
    for (auto& [mon, c] : terms_) {
      for (auto& [v, e] : mon.terms()) {
        Poly dv = on_var(v);
        if (dv.is_zero()) continue;
        Poly rest = Poly::monomial(mon.divide_var(v), c * e);
        r += rest * dv;
      }
    }
    return r;
  }

  // d/dx(v), the ordinary partial derivative.
  Poly partial(const VarIndex& v) const {
    Poly r;
    for (auto& [mon, c] : terms_) {
      std::int32_t e = mon.exponent(v);
      if (e > 0) r.add_term(mon.divide_var(v), c * e);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Rational& c = it->second;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      Rational a = abs(c);
      if (it->first.is_one()) os << rat_str(a);
      else if (a == 1) os << it->first.str();
      else os << rat_str(a) << "*" << it->first.str();
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

}  // namespace genmat
