#include "genmat/words.hpp"

#include <algorithm>
#include <sstream>

namespace genmat {

std::string ring_kind_str(RingKind k) {
  switch (k) {
    case RingKind::G: return "G";
    case RingKind::T: return "T";
    case RingKind::ZG: return "ZG";
    case RingKind::ZT: return "ZT";
  }
  return "?";
}

RingKind ring_kind_parse(const std::string& s) {
  if (s == "G") return RingKind::G;
  if (s == "T") return RingKind::T;
  if (s == "ZG") return RingKind::ZG;
  if (s == "ZT") return RingKind::ZT;
  throw std::invalid_argument("unknown ring kind '" + s + "' (expected G, T, ZG, ZT)");
}

void RingId::validate() const {
  if (n < 2) throw std::invalid_argument("RingId: n must be >= 2");
  if (m < 1) throw std::invalid_argument("RingId: m must be >= 1");
  if (m == 1 && kind != RingKind::T)
    throw std::invalid_argument("RingId: m = 1 is only meaningful for T");
}

std::string RingId::str() const {
  std::ostringstream os;
  os << ring_kind_str(kind) << "(m=" << m << ",n=" << n << ")";
  return os.str();
}

std::int64_t total_degree(const MultiDegree& d) {
  std::int64_t s = 0;
  for (auto x : d) {
    if (x < 0) throw std::invalid_argument("MultiDegree: negative entry");
    s += x;
  }
  return s;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << "X" << w[i];
  }
  return os.str();
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word min_rotation(const Word& w) {
  if (w.size() <= 1) return w;
  Word best = w;
  Word cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

MultiDegree TraceMonomial::multidegree(int m) const {
  MultiDegree d(static_cast<std::size_t>(m), 0);
  auto count = [&](const Word& w) {
    for (int letter : w) {
      if (letter < 1 || letter > m) throw std::invalid_argument("TraceMonomial: letter out of range");
      ++d[static_cast<std::size_t>(letter - 1)];
    }
  };
  for (auto& f : factors) count(f);
  count(tail);
  return d;
}

std::string TraceMonomial::str() const {
  if (factors.empty()) return word_str(tail);
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << "tr(" << word_str(factors[i]) << ")";
  }
  if (!tail.empty()) os << "*" << word_str(tail);
  return os.str();
}

bool trace_monomial_less(const TraceMonomial& a, const TraceMonomial& b) {
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (a.factors[i] != b.factors[i]) return word_less(a.factors[i], b.factors[i]);
  }
  return word_less(a.tail, b.tail);
}

PolyMatrix make_generic_matrix(int h, int n) {
  if (h < 1) throw std::invalid_argument("make_generic_matrix: h must be >= 1");
  if (n < 1) throw std::invalid_argument("make_generic_matrix: n must be >= 1");
  PolyMatrix x(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      x.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          Poly::var({h, i, j});
  return x;
}

PolyMatrix eval_word(const Word& w, int m, int n) {
  PolyMatrix acc = PolyMatrix::identity(static_cast<std::size_t>(n));
  for (int letter : w) {
    if (letter < 1 || letter > m) throw std::invalid_argument("eval_word: letter out of range");
    acc = acc * make_generic_matrix(letter, n);
  }
  return acc;
}

PolyMatrix eval_trace_monomial(const TraceMonomial& t, int m, int n) {
  Poly scalar(Rational(1));
  for (auto& f : t.factors) scalar *= eval_word(f, m, n).trace();
  return eval_word(t.tail, m, n).scaled_poly(scalar);
}

/******** spanning sets ********/

namespace {

Integer multinomial(const MultiDegree& d) {
  Integer r(1);
  std::int64_t acc = 0;
  for (auto x : d)
    for (std::int64_t k = 1; k <= x; ++k) {
      ++acc;
      r = r * acc / k;  // always exact: partial products are binomials
    }
  return r;
}

// All componentwise sub-multidegrees of d, lex order.
void sub_multidegrees(const MultiDegree& d, std::size_t idx, MultiDegree& cur,
                      std::vector<MultiDegree>& out) {
  if (idx == d.size()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= d[idx]; ++v) {
    cur[idx] = v;
    sub_multidegrees(d, idx + 1, cur, out);
  }
}

bool fits(const MultiDegree& part, const MultiDegree& whole) {
  for (std::size_t i = 0; i < part.size(); ++i)
    if (part[i] > whole[i]) return false;
  return true;
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_deg(const MultiDegree& d) {
  for (auto x : d)
    if (x != 0) return false;
  return true;
}

// Multisets of necklaces with multidegrees summing to `remaining`, chosen
// with non-decreasing index into the fixed necklace list.
void necklace_multisets(const std::vector<std::pair<Word, MultiDegree>>& necklaces,
                        std::size_t idx, const MultiDegree& remaining,
                        std::vector<Word>& cur, const Word& tail,
                        std::vector<TraceMonomial>& out, const Budget& budget) {
  if (is_zero_deg(remaining)) {
    TraceMonomial t;
    t.factors = cur;
    std::sort(t.factors.begin(), t.factors.end(), word_less);
    t.tail = tail;
    out.push_back(std::move(t));
    if (out.size() > budget.max_symbols)
      throw BudgetExceeded("spanning_set: symbol budget exceeded (" +
                           std::to_string(budget.max_symbols) + ")");
    return;
  }
  if (idx == necklaces.size()) return;
  // skip necklaces[idx]
  necklace_multisets(necklaces, idx + 1, remaining, cur, tail, out, budget);
  // or take it one or more times
  if (fits(necklaces[idx].second, remaining)) {
    cur.push_back(necklaces[idx].first);
    necklace_multisets(necklaces, idx, minus(remaining, necklaces[idx].second), cur, tail, out,
                       budget);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_multidegree(const MultiDegree& d, const Budget& budget) {
  Integer count = multinomial(d);
  if (count > Integer(budget.max_symbols))
    throw BudgetExceeded("words_of_multidegree: " + count.str() + " words exceed the budget of " +
                         std::to_string(budget.max_symbols));
  Word base;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::int64_t k = 0; k < d[i]; ++k) base.push_back(static_cast<int>(i + 1));
  std::vector<Word> out;
  if (base.empty()) {
    out.push_back(base);
    return out;
  }
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<TraceMonomial> spanning_set(const RingId& ring, const MultiDegree& d,
                                        const Budget& budget) {
  ring.validate();
  if (static_cast<int>(d.size()) != ring.m)
    throw std::invalid_argument("spanning_set: multidegree length must equal m");
  total_degree(d);  // validates non-negativity

  std::vector<TraceMonomial> out;
  if (!ring.with_traces()) {
    for (auto& w : words_of_multidegree(d, budget)) {
      TraceMonomial t;
      t.tail = w;
      out.push_back(std::move(t));
    }
    // words_of_multidegree enforces the budget and lex order already
    return out;
  }

  // Necklace list over all sub-multidegrees of d (nonzero), ordered (length, lex).
  std::vector<std::pair<Word, MultiDegree>> necklaces;
  {
    std::vector<MultiDegree> subs;
    MultiDegree cur(d.size(), 0);
    sub_multidegrees(d, 0, cur, subs);
    std::vector<Word> all;
    for (auto& f : subs) {
      if (is_zero_deg(f)) continue;
      for (auto& w : words_of_multidegree(f, budget))
        if (w == min_rotation(w)) all.push_back(w);
    }
    std::sort(all.begin(), all.end(), word_less);
    for (auto& w : all) {
      MultiDegree f(d.size(), 0);
      for (int letter : w) ++f[static_cast<std::size_t>(letter - 1)];
      necklaces.push_back({w, f});
    }
  }

  // Tails in lex order of their multidegree, then lex within.
  std::vector<MultiDegree> tails;
  MultiDegree cur(d.size(), 0);
  sub_multidegrees(d, 0, cur, tails);
  for (auto& t : tails) {
    for (auto& tail : words_of_multidegree(t, budget)) {
      std::vector<Word> factors;
      necklace_multisets(necklaces, 0, minus(d, t), factors, tail, out, budget);
    }
  }
  std::sort(out.begin(), out.end(), trace_monomial_less);
  return out;
}

}  // namespace genmat
