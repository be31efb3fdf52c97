#pragma once

// Graded components R[d] as concrete coordinate spaces.  A component is
// spanned by its symbols (words / trace monomials); evaluating each symbol
// as an n x n polynomial matrix and flattening against a pinned coordinate
// index turns every question (dimension, membership, invariance) into exact
// linear algebra.

#include "genmat/linalg.hpp"
#include "genmat/words.hpp"

#include <map>
#include <optional>

namespace genmat {

// Slot order: matrix position row-major ascending, then monomial descending
// in the pinned term order (leading monomials first).
class CoordinateIndex {
 public:
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Monomial>& a,
                    const std::pair<std::size_t, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return b.second < a.second;  // monomial descending
    }
  };

  static CoordinateIndex build(const std::vector<PolyMatrix>& evals);

  Index size() const { return static_cast<Index>(keys_.size()); }
  const std::vector<std::pair<std::size_t, Monomial>>& keys() const { return keys_; }

  // Slot of (position, monomial) or -1 when the pair is not indexed.
  Index slot(std::size_t pos, const Monomial& mon) const;

  // Flatten; nullopt when the matrix involves a monomial outside the index
  // (then it cannot lie in the span that defined the index).
  std::optional<SparseVector> coordinates(const PolyMatrix& p) const;

  void append_key(std::size_t pos, const Monomial& mon);  // cache deserialization

 private:
  std::vector<std::pair<std::size_t, Monomial>> keys_;
  std::map<std::pair<std::size_t, Monomial>, Index, KeyLess> slot_of_;
};

// Inverse of CoordinateIndex::coordinates: rebuild the n x n matrix.
PolyMatrix matrix_from_coordinates(const CoordinateIndex& idx, const SparseVector& v,
                                   std::size_t n);

struct GradedBasis {
  RingId ring;
  MultiDegree degree;
  std::vector<TraceMonomial> symbols;    // spanning symbols, canonical order
  CoordinateIndex coords;
  std::vector<SparseVector> sym_vectors; // per-symbol coordinates (empty when loaded from cache)
  std::vector<SparseVector> basis;       // canonical reduced-echelon basis of the component
  std::vector<Index> pivot_symbols;      // greedy maximal independent symbol subset

  Index dimension() const { return static_cast<Index>(basis.size()); }

  // Exact coordinates of e over the spanning symbols, or nullopt when e is
  // not in the component.  Requires sym_vectors (fresh computation).
  std::optional<std::vector<Rational>> express_in_symbols(const PolyMatrix& e,
                                                          const LinAlgOptions& opts = {}) const;
};

// Builds the component: spanning symbols, evaluations, canonical basis.
// ZG/ZT intersect the span with the scalar-matrix condition first.
GradedBasis graded_component_basis(const RingId& ring, const MultiDegree& d,
                                   const Budget& budget = {}, const LinAlgOptions& opts = {});

}  // namespace genmat
