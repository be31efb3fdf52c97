#pragma once

// Exact sparse linear algebra over Rational.  The exact path is
// fraction-free (integer cross-multiplication with content removal); an
// optional modular pre-pass picks pivots on larger systems and its
// candidates are always certified exactly afterwards.  Outputs are
// canonical: reduced echelon form, pivot coefficient 1, pivots left-to-right,
// so every downstream basis is byte-stable.

#include "genmat/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace genmat {

using Index = std::int64_t;

// Sorted (index, value) pairs, values nonzero.
using SparseVector = std::vector<std::pair<Index, Rational>>;

SparseVector sv_axpy(const Rational& a, const SparseVector& x,
                     const Rational& b, const SparseVector& y);  // a*x + b*y
Rational sv_dot_dense(const SparseVector& x, const std::vector<Rational>& dense);
void sv_make_primitive(SparseVector& v);  // scale to coprime integers, positive content

struct SparseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<SparseVector> row;  // row[i] sorted by column

  SparseMatrix() = default;
  SparseMatrix(Index r, Index c) : rows(r), cols(c), row(static_cast<std::size_t>(r)) {}

  static SparseMatrix from_columns(Index nrows, const std::vector<SparseVector>& columns);

  void set(Index i, Index j, const Rational& v);  // build helper; keeps rows sorted
  Index nnz() const;
};

struct LinAlgOptions {
  bool use_modular = true;            // allow the modular pre-pass at all
  Index modular_threshold = 200000;   // rows*cols above which the pre-pass kicks in
  std::size_t prime_index = 0;        // which deterministic prime starts the pre-pass
};

struct RrefResult {
  std::vector<SparseVector> rows;   // nonzero RREF rows, pivot columns increasing
  std::vector<Index> pivot_cols;
};

// Unique reduced row echelon form (always the pure exact path).
RrefResult rref(const SparseMatrix& a);

Index rank(const SparseMatrix& a, const LinAlgOptions& opts = {});

// Canonical basis of the right null space: one vector per free column f,
// with entry 1 at f and the pivot entries filled in from the RREF.
std::vector<SparseVector> kernel(const SparseMatrix& a, const LinAlgOptions& opts = {});

// Exact coordinates of v in the span of the given columns (free coordinates
// zero), or nullopt if v is outside the span.  nrows bounds the coordinate
// indices appearing in v and the span.
std::optional<std::vector<Rational>> membership(const SparseVector& v,
                                                const std::vector<SparseVector>& span_columns,
                                                Index nrows,
                                                const LinAlgOptions& opts = {});

}  // namespace genmat
