#pragma once

// Schur multiplicities of the graded components.  The character of R[total
// degree d] under the m x m group is a nonnegative sum of Schur functions;
// the multiplicity of s_lambda is recovered from plain weight-space
// dimensions (graded components at permuted-weight cells all have the same
// dimension) by the unitriangular Kostka system
//   dim R[mu] = sum_lambda K_{lambda,mu} mult_lambda(R),
// solved in lex-descending partition order.  Highest-weight spaces provide
// an independent second path to the same numbers.

#include "genmat/gl_action.hpp"

namespace genmat {

// Weakly decreasing nonnegative parts; trailing zeros allowed but the
// canonical form (partitions_of, table keys) stores positive parts only.
using Partition = std::vector<std::int64_t>;

bool is_partition(const Partition& p);
Partition strip_zeros(Partition p);

// All partitions of d with at most max_parts parts, lex-descending, so every
// partition dominating another comes first.
std::vector<Partition> partitions_of(std::int64_t d, int max_parts);

// Number of semistandard tableaux of shape lambda and content mu (entries i
// used mu_i times), via the horizontal-strip recursion.  Symmetric in mu.
long long kostka_number(const Partition& lambda, const MultiDegree& mu);

// dim R[mu] for an arbitrary weight; depends only on the sorted weight.
Index weight_space_dim(const RingId& ring, const MultiDegree& mu, const Budget& budget = {},
                       const LinAlgOptions& opts = {});

// Caps for the Kostka solve; raise explicitly for bigger runs.
struct MultCaps {
  std::int64_t max_degree = 12;
  int max_m = 4;
};

struct MultiplicityTable {
  RingId ring;
  std::int64_t degree = 0;
  // (lambda, multiplicity) for every partition of `degree` with <= m parts,
  // lex-descending; zero multiplicities are kept so the table is exhaustive.
  std::vector<std::pair<Partition, long long>> mult;

  long long value(const Partition& lambda) const;  // 0 when lambda is absent
};

MultiplicityTable multiplicity_table(const RingId& ring, std::int64_t degree,
                                     const MultCaps& caps = {}, const Budget& budget = {},
                                     const LinAlgOptions& opts = {});

long long mult_lambda(const RingId& ring, const Partition& lambda, const MultCaps& caps = {},
                      const Budget& budget = {}, const LinAlgOptions& opts = {});

// Cross-checks the table against the highest-weight machinery and the Weyl
// symmetry of weight-space dimensions:
//   * dim hw(R, lambda) == mult_lambda for every partition lambda of d,
//   * dim R[mu] is constant on permutations of each partition weight.
// Returns true iff every comparison agrees.
bool kostka_oracle_check(const RingId& ring, std::int64_t degree, const MultCaps& caps = {},
                         const Budget& budget = {}, const LinAlgOptions& opts = {});

// dim R^{SL_m}[rm] computed both ways: as the weight-(r,...,r) highest-weight
// space and as mult_{(r^m)}(R).
struct Remark92Report {
  RingId ring;
  std::int64_t r = 0;
  Index hw_dim = 0;
  long long rect_mult = 0;
  bool equal = false;
};

Remark92Report remark92_check(const RingId& ring, std::int64_t r, const MultCaps& caps = {},
                              const Budget& budget = {}, const LinAlgOptions& opts = {});

// Determinant-one invariants of total degree d vanish when m does not divide
// d: every multidegree cell of such a d carries a nontrivial character of the
// determinant-one diagonal subgroup.  Certified cell by cell: a diagonal
// element diag(..,2,1/2,..) must scale the whole cell by a factor != 1.
struct NonMultipleReport {
  RingId ring;
  std::int64_t dmax = 0;
  std::int64_t cells_checked = 0;  // nonzero cells certified
  bool ok = false;                 // every nonzero cell scaled as predicted
  std::string detail;              // first failure, empty when ok
};

NonMultipleReport nonmultiple_zero_check(const RingId& ring, std::int64_t dmax,
                                         const Budget& budget = {},
                                         const LinAlgOptions& opts = {});

// dim R^{SL_m}[rm] for r = 1..rmax along both computation paths, plus the
// reference growth exponent (m-1)n^2 - m^2 + 1 reported next to the data.
struct SeriesReport {
  RingId ring;
  int rmax = 0;
  std::vector<std::int64_t> hw_dims;
  std::vector<std::int64_t> mult_dims;
  bool consistent = false;
  std::int64_t exponent = 0;
};

SeriesReport invariant_dim_series(const RingId& ring, int rmax, const MultCaps& caps = {},
                                  const Budget& budget = {}, const LinAlgOptions& opts = {});

std::int64_t reference_exponent(int m, int n);

}  // namespace genmat
