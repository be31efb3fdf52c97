#pragma once

// Exhaustive dimension counting: codimension bounds for products of
// Grassmannians inside a big one, the elementary pair inequality behind
// them, and character-space dimensions for finite-order conjugations.  Pure
// integer combinatorics; roots of unity live as residues mod q.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace genmat {

// dim Gr(m, N) = (N - m) m.
std::int64_t gr_dim(std::int64_t m, std::int64_t N);

// gr_dim(sum m_i, sum N_i) - sum gr_dim(m_i, N_i).
std::int64_t component_codim(const std::vector<std::int64_t>& ms, const std::vector<std::int64_t>& Ns);

struct PropGrassReport {
  std::vector<std::int64_t> Ns;
  std::int64_t m = 0;
  std::int64_t N = 0;      // sum of the blocks
  std::int64_t bound = 0;  // N - max N_i
  std::int64_t min_codim = 0;
  std::int64_t compositions = 0;
  bool bound_ok = false;  // every composition has codim >= bound
  std::vector<std::vector<std::int64_t>> equality;  // compositions attaining the bound
  // Equality occurs exactly for r = 1, or r = 2 with m = 2 and N = 4.
  bool classification_ok = false;
  bool ok() const { return bound_ok && classification_ok; }
};

// Enumerates all compositions (m_1..m_r) of m with m_i <= N_i and verifies
// the codimension bound; 2 <= m <= N-2 required.
PropGrassReport prop_grass_check(const std::vector<std::int64_t>& Ns, std::int64_t m);

struct PropGrassSweep {
  std::int64_t max_total = 0;
  std::int64_t cases = 0;
  bool all_ok = false;
  // Sanity: min codim is non-increasing in max N_i at fixed (N, m).
  bool monotone_ok = false;
  std::string first_failure;
  bool ok() const { return all_ok && monotone_ok; }
};

// Runs prop_grass_check over every block multiset with sum <= max_total and
// every admissible m.
PropGrassSweep prop_grass_sweep(std::int64_t max_total);

struct LemmaElemReport {
  int max_r = 0;
  std::int64_t max_val = 0;
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::int64_t equality_r1 = 0;        // equality family (i): r = 1
  std::int64_t equality_r2_units = 0;  // equality family (ii): r = 2, both pairs (1,1)
  bool classification_ok = false;   // no equality outside the two families
  std::string first_failure;
  bool ok() const { return violations == 0 && classification_ok; }
};

// Brute force over pair tuples (l_i, m_i), r <= max_r, entries <= max_val,
// l_i + m_i >= 1 and aggregates l, m >= 2:
//   (l-1)(m-1) - 1 >= sum l_i m_i - max(l_i + m_i).
LemmaElemReport lemma_elem_check(int max_r, std::int64_t max_val);

/******** character spaces of a finite-order conjugation ********/

struct EigenvalueProfile {
  std::vector<std::int64_t> l;  // eigenvalue multiplicities, positive, sum n
  std::vector<std::int64_t> a;  // pairwise distinct exponents mod q
  std::int64_t q = 2;

  void validate() const;
  std::int64_t n() const;
};

// mu -> dim V_mu = sum over pairs with a_i - a_j = mu (mod q) of l_i l_j;
// zero-dimensional residues are omitted.  Always: sum of dims = n^2 and the
// residue-0 space has dim sum l_i^2.
std::map<std::int64_t, std::int64_t> character_space_dims(const EigenvalueProfile& p);

struct Lemma5Report {
  int n_max = 0;
  std::int64_t q_max = 0;
  std::int64_t profiles = 0;
  std::int64_t sum_violations = 0;  // sum of dims != n^2 (never expected)
  std::int64_t a_violations = 0;    // dim V_1 < dim V_mu somewhere
  std::int64_t b_violations = 0;    // strict gap inequality fails where required
  std::int64_t n2_two_space_cases = 0;          // n = 2 exception region size
  bool n2_exception_all_equality = false;    // the whole region sits on the boundary
  std::string first_failure;
  bool ok() const { return sum_violations == 0 && a_violations == 0 && b_violations == 0; }
};

// For every profile with s >= 2, n <= n_max, q <= q_max and every m with
// 2 <= m <= n^2-2:
//   (a) dim V_1 >= dim V_mu for all mu;
//   (b) dim Gr(m,n^2) - dim Gr(m,n^2)^g > n^2 - dim V_1, where the fixed
//       locus dimension is the best composition of m across the character
//       spaces — strict for n >= 3 and for n = 2 with three or more nonzero
//       spaces; the two-space n = 2 region is tallied as the exception.
Lemma5Report lemma5_check(int n_max, std::int64_t q_max);

}  // namespace genmat
