#pragma once

// Symbolic spanning data for the four graded rings:
//   G  - the algebra generated by the generic matrices X_1..X_m,
//   T  - G extended by traces of words (the trace ring),
//   ZG - the scalar part (center) of G,  ZT - the scalar part of T.
// Graded components are spanned by words (for G) and by products of traced
// necklaces times a tail word (for T); ZG/ZT reuse those spanning sets and
// intersect with the scalar-matrix condition later.

#include "genmat/matrix.hpp"

#include <string>
#include <vector>

namespace genmat {

enum class RingKind { G, T, ZG, ZT };

std::string ring_kind_str(RingKind k);
RingKind ring_kind_parse(const std::string& s);

struct RingId {
  RingKind kind = RingKind::G;
  int m = 2;  // number of generic matrices, >= 1 (m = 1 only for T)
  int n = 2;  // matrix size, >= 2

  void validate() const;
  bool with_traces() const { return kind == RingKind::T || kind == RingKind::ZT; }
  bool central() const { return kind == RingKind::ZG || kind == RingKind::ZT; }
  std::string str() const;
};

using MultiDegree = std::vector<std::int64_t>;

std::int64_t total_degree(const MultiDegree& d);

// A word in the generators: letters 1..m, the empty word is the identity.
using Word = std::vector<int>;

std::string word_str(const Word& w);
bool word_less(const Word& a, const Word& b);      // length, then lex
Word min_rotation(const Word& w);                  // canonical necklace form

// tr(f_1)...tr(f_k) * tail, factors cyclic-minimal and sorted.  A plain word
// of G is the case with no factors.  Everything is canonical so symbols can
// be compared, ordered, and serialized byte-stably.
struct TraceMonomial {
  std::vector<Word> factors;
  Word tail;

  MultiDegree multidegree(int m) const;
  std::string str() const;
  bool operator==(const TraceMonomial& o) const { return factors == o.factors && tail == o.tail; }
};

bool trace_monomial_less(const TraceMonomial& a, const TraceMonomial& b);

// X_h as an n x n matrix of entry variables.
PolyMatrix make_generic_matrix(int h, int n);

PolyMatrix eval_word(const Word& w, int m, int n);
PolyMatrix eval_trace_monomial(const TraceMonomial& t, int m, int n);

struct Budget {
  std::size_t max_symbols = 50000;
};

// All words with the given letter multiplicities, lex order.
std::vector<Word> words_of_multidegree(const MultiDegree& d, const Budget& budget = {});

// Deterministically ordered spanning symbols of the graded component R[d].
// For G/ZG these are words (wrapped as factorless trace monomials); for T/ZT
// all trace monomials of the multidegree.  Throws BudgetExceeded when the
// symbol count would pass the budget.
std::vector<TraceMonomial> spanning_set(const RingId& ring, const MultiDegree& d,
                                        const Budget& budget = {});

}  // namespace genmat
