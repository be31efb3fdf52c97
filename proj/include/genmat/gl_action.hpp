#pragma once

// The m x m matrix group acting on the generators by linear substitution
//   g : X_j |-> sum_i g_ij X_i,
// which on entry variables is x(j;a,b) |-> sum_i g_ij x(i;a,b) applied
// entrywise.  act(g, act(h, e)) = act(g*h, e); the convention is pinned by a
// unit test.  Invariants of the determinant-one subgroup in total degree rm
// are exactly the weight-(r,...,r) vectors killed by the m-1 simple raising
// operators; those operators act as derivations sending layer i+1 variables
// to layer i.

#include "genmat/graded.hpp"
#include "genmat/rng.hpp"

#include <optional>

namespace genmat {

struct GroupElement {
  RationalMatrix mat;  // m x m, must be invertible

  explicit GroupElement(RationalMatrix g);
  std::size_t m() const { return mat.size(); }
};

Poly act_gl(const GroupElement& g, const Poly& e);
PolyMatrix act_gl(const GroupElement& g, const PolyMatrix& e);

// Simple raising operator E_i (i in 1..m-1): the derivation with
// x(i+1;a,b) |-> x(i;a,b), all other variables |-> 0.
Poly apply_raising(const Poly& e, int i);
PolyMatrix apply_raising(const PolyMatrix& e, int i);

// Weight-d vectors killed by all simple raising operators, as a subspace of
// the graded component R[d]: canonical basis plus expressions over the
// component's spanning symbols.
struct InvariantBasis {
  GradedBasis cell;
  std::vector<SparseVector> basis;                 // canonical reduced-echelon rows
  std::vector<std::vector<Rational>> symbol_combos;  // per row, coordinates over cell.symbols

  Index dimension() const { return static_cast<Index>(basis.size()); }
  PolyMatrix element(std::size_t k) const;   // reconstruct basis[k] as a matrix of polynomials
  std::string combo_str(std::size_t k) const;
};

InvariantBasis highest_weight_space(const RingId& ring, const MultiDegree& d,
                                    const Budget& budget = {}, const LinAlgOptions& opts = {});

// Determinant-one invariants in total degree r*m: the weight-(r,...,r)
// highest-weight space.
InvariantBasis sl_invariants(const RingId& ring, std::int64_t r, const Budget& budget = {},
                             const LinAlgOptions& opts = {});

// Intersects span(b.basis) with the scalar-matrix condition; the result is
// again canonical.
InvariantBasis centrality_filter(const InvariantBasis& b, const LinAlgOptions& opts = {});

/******** randomized exact probes ********/

struct ProbeReport {
  bool ok = false;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

// f(C A_1 C^-1, ..., C A_m C^-1) == C f(A_1,...,A_m) C^-1 at random integer
// points, exactly.  One-sided: ok=true certifies nothing beyond the sampled
// points, ok=false exhibits a concrete counterexample in `detail`.
ProbeReport pgl_equivariance_probe(const PolyMatrix& f, int m, int trials, std::uint64_t seed,
                                   long long bound = 5);

// act(g, e) == det(g)^power * e for random invertible integer g.
ProbeReport det_semiinvariance_probe(const Poly& e, int m, int power, int trials,
                                     std::uint64_t seed, long long bound = 3);
ProbeReport det_semiinvariance_probe(const PolyMatrix& e, int m, int power, int trials,
                                     std::uint64_t seed, long long bound = 3);

struct PiDegreeReport {
  int certified = 1;            // n' with the generated algebra of dimension n'^2 (1 = only scalars certified)
  int reached_r = 0;            // first r at which the certified dimension was attained (0 = never)
  std::int64_t algebra_dim = 1; // dimension of the generated unital algebra at the end
  std::vector<std::int64_t> dims_per_r;  // invariant-space dimensions for r = 1..max_r
  std::uint64_t seed = 0;
};

// Accumulates determinant-one invariants for r = 1..max_r, specializes them
// at a random integer point and tracks the dimension of the unital algebra
// they generate inside M_n.  Reaching n^2 certifies PI-degree n.
PiDegreeReport pi_degree_lower_bound_probe(const RingId& ring, int max_r, std::uint64_t seed,
                                           long long bound = 5, const Budget& budget = {},
                                           const LinAlgOptions& opts = {});

/******** deterministic random matrices for probes ********/

RationalMatrix random_integer_matrix(Rng& rng, std::size_t n, long long bound);
RationalMatrix random_invertible_matrix(Rng& rng, std::size_t n, long long bound);  // det != 0
RationalMatrix random_unimodular_matrix(Rng& rng, std::size_t n, int steps = 12);   // det == 1

}  // namespace genmat
