#pragma once

// Dense univariate polynomials over Rational: characteristic polynomials,
// exact gcds, Yun squarefree decomposition for the eigenvalue-multiplicity
// probe.  Coefficients ascending: p[i] is the coefficient of t^i.

#include "genmat/rational.hpp"

#include <algorithm>
#include <vector>

namespace genmat {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& a) { return UniPoly({a}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> r = c_;
    Rational l = c_.back();
    for (auto& x : r) x /= l;
    return UniPoly(std::move(r));
  }

  // Euclidean division; divisor must be nonzero.
  static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("UniPoly::divrem: division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
      if (rem.back() == 0) { rem.pop_back(); continue; }
      std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(db);
      Rational f = rem.back() / b.c_.back();
      quo[shift] = f;
      for (int i = 0; i <= db; ++i) rem[shift + static_cast<std::size_t>(i)] -= f * b.c_[static_cast<std::size_t>(i)];
      rem.pop_back();
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly q, r;
      divrem(a, b, q, r);
      a = b;
      b = r;
    }
    return a.is_zero() ? a : a.monic();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Yun's squarefree decomposition: p = lc * prod_k out[k-1]^k with each factor
// squarefree and pairwise coprime.  out[k-1] may be the constant 1.
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = UniPoly::gcd(f, fp);
  UniPoly b, c, q, r;
  UniPoly::divrem(f, a, b, r);   // b = f / gcd
  UniPoly::divrem(fp, a, c, r);  // c = f' / gcd
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = UniPoly::gcd(b, d);
    out.push_back(g.monic());
    UniPoly::divrem(b, g, q, r);
    b = q;
    UniPoly::divrem(d, g, c, r);
    d = c - b.derivative();
  }
  return out;
}

// Multiplicity profile of the roots (over the algebraic closure): for each k
// with a nonempty squarefree factor, the number of distinct roots of
// multiplicity exactly k.  pairs (k, count), ascending k, zero counts skipped.
inline std::vector<std::pair<int, int>> root_multiplicity_profile(const UniPoly& p) {
  std::vector<std::pair<int, int>> prof;
  auto sf = squarefree_decomposition(p);
  for (std::size_t k = 0; k < sf.size(); ++k)
    if (sf[k].degree() > 0) prof.push_back({static_cast<int>(k + 1), sf[k].degree()});
  return prof;
}

}  // namespace genmat
