#pragma once

// The explicit elements of the theory: the discriminant Delta of an
// n^2-tuple of n x n matrices, its drop-one-column minors, the matrix Y
// built from them at m = n^2-1, the characteristic coefficients of Y, the
// standard polynomials F_m with their evaluations f_{m,n}, and the exact
// randomized probes around them.

#include "genmat/gl_action.hpp"

namespace genmat {

/******** discriminant of a matrix tuple ********/

// det of the n^2 x n^2 matrix whose h-th row is the row-major flattening of
// args[h]; exactly multilinear and alternating in the arguments.
Poly discriminant(const std::vector<PolyMatrix>& args);
Rational discriminant_at(const std::vector<RationalMatrix>& args);

// Delta(X_1, ..., X_{n^2}) with all arguments generic.
Poly generic_discriminant(int n);

// The m x m minor of the stacked generic matrices X_1..X_m (m = n^2-1) with
// the column of position (i,j) removed; 1-based i,j.
Poly delta_minor(int i, int j, int n);

// Sign s with delta_minor(i,j,n) == s * discriminant(X_1..X_m, e_ij):
// determined by the parity of the removed column, certified by an exact
// polynomial comparison (CertificationError on mismatch).
int delta_minor_sign(int i, int j, int n);

/******** Y and its characteristic coefficients (m = n^2-1) ********/

// Y = sum_{i,j} Delta(X_1,...,X_m, e_ji) e_ij.  Every entry is multilinear
// of multidegree (1,...,1).  n = 2 by default; n = 3 is minutes-scale and
// must be enabled explicitly via max_n.
PolyMatrix build_Y(int n, int max_n = 2);

struct TraceIdentityReport {
  int n = 0;
  bool symbolic_ok = false;  // tr(Y e_ij) == Delta(X, e_ij) over all units
  bool numeric_ok = false;   // tr(Y(A) Z) == Delta(A, Z) at random integers
  int trials = 0;
  std::uint64_t seed = 0;
};

TraceIdentityReport trace_identity_check(int n, int trials, std::uint64_t seed, int max_n = 2);

struct CharCoeffReport {
  int n = 0;
  bool c1_is_minus_trace = false;      // c_1 == -tr(Y)
  bool c1_is_minus_disc_at_id = false; // c_1 == -Delta(X_1..X_m, I_n)
  bool cayley_hamilton = false;        // Y^n + c_1 Y^{n-1} + ... + c_n == 0
  bool ok() const { return c1_is_minus_trace && c1_is_minus_disc_at_id && cayley_hamilton; }
};

// Exact symbolic verification; n = 2 only (the n = 3 matrix products blow
// past any sensible budget).
CharCoeffReport char_coeff_identities(int n = 2);

// Jacobian-rank certificate of algebraic independence.  true certifies
// independence (full rank at a sampled integer point); false after bounded
// retries is inconclusive — and is the permanent answer for genuinely
// dependent inputs.
struct IndependenceReport {
  bool independent = false;
  int attempts = 0;
  std::uint64_t seed = 0;
  Index last_rank = 0;
  Index wanted_rank = 0;
};

IndependenceReport algebraic_independence_probe(const std::vector<Poly>& polys,
                                                std::uint64_t seed, int max_attempts = 8,
                                                long long bound = 10);

/******** standard polynomials ********/

// F_m = sum_{permutations s of 1..m} sign(s) x_{s(1)} ... x_{s(m)}, as
// (sign, word) pairs in lex word order.
std::vector<std::pair<int, Word>> standard_polynomial(int m);

// f_{m,n} = F_m(X_1, ..., X_m); budget cap m <= 8.
PolyMatrix eval_standard(int m, int n);

// F_m at explicit arguments.
PolyMatrix eval_standard_at(const std::vector<PolyMatrix>& args);
RationalMatrix eval_standard_at(const std::vector<RationalMatrix>& args);

struct AmitsurLevitzkiReport {
  int m = 0, n = 0;
  bool f_is_zero = false;
  bool expected_zero = false;  // m >= 2n
  bool ok() const { return f_is_zero == expected_zero; }
};

AmitsurLevitzkiReport amitsur_levitzki_check(int m, int n);

// Abstract reduction F_m(1, x_2..x_m) == F_{m-1}(x_2..x_m) for odd m,
// verified on signed words (no matrix evaluation involved).
bool standard_reduction_check(int m);

// F_m at the unit sequence e_{1,2}, e_{2,2}, e_{2,3}, e_{3,3}, ...,
// e_{r-1,r}, e_{r,1} with m = 2r-2 even, inside n x n (n >= r).  The
// contract e_{1,1} - e_{r,r} is the caller's to assert.
RationalMatrix matrix_unit_probe(int m, int n);

/******** eigenvalue multiplicities after specialization ********/

struct EigenProbeReport {
  int trials = 0;
  std::uint64_t seed = 0;
  bool found_simple = false;  // some specialization has a simple eigenvalue
  int witness_trial = -1;
  // (multiplicity k, degree of the multiplicity-k squarefree part) at the
  // witness specialization.
  std::vector<std::pair<int, int>> witness_profile;
};

// Specializes e at random integer points and inspects the squarefree
// decomposition of the characteristic polynomial — entirely gcd-based, no
// root finding.
EigenProbeReport eigenvalue_multiplicity_probe(const PolyMatrix& e, int trials,
                                               std::uint64_t seed, long long bound = 10);

/******** membership of discriminant powers in the word span ********/

struct DeltaMembershipReport {
  int n = 0;
  int power = 0;
  bool member = false;
  bool certified = false;  // the verdict carries an exact certificate
  std::size_t word_count = 0;
  std::uint64_t seed = 0;  // sampling seed (compressed path only)
  // Combination with sum_j coefficients[j] * word_j == Delta^power * I when
  // member; empty otherwise.  Order matches words_of_multidegree.
  std::vector<Rational> coefficients;
  std::string detail;
};

// Does Delta^power * I_n lie in the span of the multidegree-(power^{n^2})
// words of G_{n^2,n}?  power 1 runs the direct exact membership; power 2
// compresses through random integer points, solves modulo deterministic
// primes with rational reconstruction, and certifies the resulting
// combination symbolically before reporting membership.
DeltaMembershipReport delta_power_membership(int n, int power, std::uint64_t seed = 1,
                                             const Budget& budget = {},
                                             const LinAlgOptions& opts = {});

}  // namespace genmat
