#pragma once

// Dense square matrices over Rational (specialization points, group
// elements) and over Poly (generic matrices and everything built from
// them).  Characteristic polynomials use Faddeev-LeVerrier: exact, no
// auxiliary variable, divisions only by integers.

#include "genmat/linalg.hpp"
#include "genmat/poly.hpp"
#include "genmat/unipoly.hpp"

#include <optional>
#include <vector>

namespace genmat {

/******** RationalMatrix ********/

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x.at(i, k) == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  RationalMatrix scaled(const Rational& c) const {
    RationalMatrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }

  Rational trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Rational det() const {  // plain exact elimination; fine at probe sizes
    RationalMatrix w = *this;
    Rational d(1);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && w.at(p, c) == 0) ++p;
      if (p == n_) return Rational(0);
      if (p != c) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(w.at(p, j), w.at(c, j));
        d = -d;
      }
      d *= w.at(c, c);
      for (std::size_t r = c + 1; r < n_; ++r) {
        if (w.at(r, c) == 0) continue;
        Rational f = w.at(r, c) / w.at(c, c);
        for (std::size_t j = c; j < n_; ++j) w.at(r, j) -= f * w.at(c, j);
      }
    }
    return d;
  }

  std::optional<RationalMatrix> inverse() const {
    RationalMatrix w = *this, inv = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && w.at(p, c) == 0) ++p;
      if (p == n_) return std::nullopt;
      if (p != c)
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(w.at(p, j), w.at(c, j));
          std::swap(inv.at(p, j), inv.at(c, j));
        }
      Rational piv = w.at(c, c);
      for (std::size_t j = 0; j < n_; ++j) { w.at(c, j) /= piv; inv.at(c, j) /= piv; }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == c || w.at(r, c) == 0) continue;
        Rational f = w.at(r, c);
        for (std::size_t j = 0; j < n_; ++j) {
          w.at(r, j) -= f * w.at(c, j);
          inv.at(r, j) -= f * inv.at(c, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

// Monic characteristic polynomial det(tI - A) = t^n + c1 t^{n-1} + ... + cn,
// returned with coefficients ascending (UniPoly convention).
inline UniPoly char_poly(const RationalMatrix& a) {
  std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;  // t^n
  RationalMatrix mk = a;  // Faddeev-LeVerrier: M1 = A, c_k = -tr(A M_{k-1} ...)/k
  for (std::size_t k = 1; k <= n; ++k) {
    Rational ck = -mk.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    if (k < n) {
      RationalMatrix shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = a * shifted;
    }
  }
  return UniPoly(std::move(c));
}

/******** PolyMatrix ********/

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static PolyMatrix identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(Rational(1));
    return m;
  }
  static PolyMatrix scalar(std::size_t n, const Poly& p) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
    return m;
  }
  // Constant matrix unit e_{ij} (1-based indices).
  static PolyMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    PolyMatrix m(n);
    m.at(i - 1, j - 1) = Poly(Rational(1));
    return m;
  }

  std::size_t size() const { return n_; }
  Poly& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool operator==(const PolyMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return r;
  }
  PolyMatrix scaled(const Rational& c) const {
    PolyMatrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].scaled(c);
    return r;
  }
  PolyMatrix scaled_poly(const Poly& p) const {
    PolyMatrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * p;
    return r;
  }

  Poly trace() const {
    Poly t;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (auto& p : a_)
      if (!p.is_zero()) return false;
    return true;
  }

  // Scalar matrix: off-diagonal zero, all diagonal entries equal.
  bool is_scalar() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && !at(i, j).is_zero()) return false;
        if (i != j) continue;
        if (at(i, i) != at(0, 0)) return false;
      }
    return true;
  }

  RationalMatrix eval(const std::function<Rational(const VarIndex&)>& point) const {
    RationalMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = at(i, j).eval(point);
    return r;
  }

  PolyMatrix substitute_layers(const std::vector<std::vector<Rational>>& coef) const {
    PolyMatrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].substitute_layers(coef);
    return r;
  }

  PolyMatrix derive(const std::function<Poly(const VarIndex&)>& on_var) const {
    PolyMatrix r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].derive(on_var);
    return r;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Poly> a_;
};

// Characteristic coefficients c_1..c_n of det(tI - A) for a polynomial
// matrix, via Faddeev-LeVerrier (out[k-1] = c_k).
inline std::vector<Poly> char_poly_coeffs(const PolyMatrix& a) {
  std::size_t n = a.size();
  std::vector<Poly> c(n);
  PolyMatrix mk = a;
  for (std::size_t k = 1; k <= n; ++k) {
    Poly ck = (-mk.trace()).scaled(Rational(1, static_cast<long>(k)));
    c[k - 1] = ck;
    if (k < n) {
      PolyMatrix shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = a * shifted;
    }
  }
  return c;
}

// Exact determinant of a square array of polynomials by minor expansion with
// dynamic programming over column subsets (fine up to the 9x9 stacked
// matrices used here).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace genmat
