#pragma once

// Commutative monomials in the entry variables x(h;i,j): h = which generic
// matrix (1-based), (i,j) = the entry.  The variable order is the flat
// (h,i,j) lexicographic order and the term order is graded lex on it; both
// are pinned here once and reused by every serializer and coordinate index.

#include "genmat/rational.hpp"

#include <compare>
#include <cstdint>
#include <sstream>
#include <vector>

namespace genmat {

struct VarIndex {
  std::int32_t h = 1;  // generic matrix index, 1..m
  std::int32_t i = 1;  // row, 1..n
  std::int32_t j = 1;  // col, 1..n

  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

inline std::string var_str(const VarIndex& v) {
  std::ostringstream os;
  os << "x(" << v.h << ";" << v.i << "," << v.j << ")";
  return os.str();
}

// Sparse exponent list, sorted by variable, no zero exponents — the unique
// representative of each monomial.
class Monomial {
 public:
  using Term = std::pair<VarIndex, std::int32_t>;

  Monomial() = default;

  static Monomial var(VarIndex v, std::int32_t exp = 1) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp > 0) m.terms_.push_back({v, exp});
    return m;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto& t : terms_) d += t.second;
    return d;
  }

  std::int32_t exponent(const VarIndex& v) const {
    for (auto& t : terms_)
      if (t.first == v) return t.second;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() && b < o.terms_.size()) {
      if (terms_[a].first < o.terms_[b].first) r.terms_.push_back(terms_[a++]);
      else if (o.terms_[b].first < terms_[a].first) r.terms_.push_back(o.terms_[b++]);
      else { r.terms_.push_back({terms_[a].first, terms_[a].second + o.terms_[b].second}); ++a; ++b; }
    }
    for (; a < terms_.size(); ++a) r.terms_.push_back(terms_[a]);
    for (; b < o.terms_.size(); ++b) r.terms_.push_back(o.terms_[b]);
    return r;
  }

  // Divide by v once; precondition exponent(v) > 0.
  Monomial divide_var(const VarIndex& v) const {
    Monomial r;
    r.terms_.reserve(terms_.size());
    bool hit = false;
    for (auto& t : terms_) {
      if (t.first == v) {
        hit = true;
        if (t.second > 1) r.terms_.push_back({t.first, t.second - 1});
      } else {
        r.terms_.push_back(t);
      }
    }
    if (!hit) throw std::invalid_argument("Monomial::divide_var: variable absent");
    return r;
  }

  // Degree in each h-layer, for multidegree bookkeeping (m = layer count).
  std::vector<std::int64_t> multidegree(std::size_t m) const {
    std::vector<std::int64_t> d(m, 0);
    for (auto& t : terms_) {
      if (t.first.h < 1 || static_cast<std::size_t>(t.first.h) > m)
        throw std::invalid_argument("Monomial::multidegree: h out of range");
      d[static_cast<std::size_t>(t.first.h - 1)] += t.second;
    }
    return d;
  }

  bool operator==(const Monomial& o) const { return terms_ == o.terms_; }

  // Graded lex: total degree first; ties broken lexicographically on the
  // exponent vector in (h,i,j) variable order (earlier variable with the
  // larger exponent wins).
  bool operator<(const Monomial& o) const {
    std::int64_t da = degree(), db = o.degree();
    if (da != db) return da < db;
    std::size_t a = 0, b = 0;
    while (a < terms_.size() && b < o.terms_.size()) {
      if (terms_[a].first < o.terms_[b].first) return false;   // *this has earlier var -> larger
      if (o.terms_[b].first < terms_[a].first) return true;
      if (terms_[a].second != o.terms_[b].second) return terms_[a].second < o.terms_[b].second;
      ++a; ++b;
    }
    if (a < terms_.size()) return false;
    if (b < o.terms_.size()) return true;
    return false;
  }

  std::string str() const {
    if (terms_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      if (!first) os << "*";
      first = false;
      os << var_str(t.first);
      if (t.second != 1) os << "^" << t.second;
    }
    return os.str();
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace genmat
