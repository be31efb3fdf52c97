#include "genmat/special.hpp"

#include "genmat/modular.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace genmat {

/******** discriminant ********/

namespace {

int check_tuple_size(std::size_t count, std::size_t n) {
  if (n < 2) throw std::invalid_argument("discriminant: matrices must be at least 2x2");
  if (count != n * n)
    throw std::invalid_argument("discriminant: need exactly n^2 arguments of size n");
  return static_cast<int>(n);
}

}  // namespace

Poly discriminant(const std::vector<PolyMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("discriminant: no arguments");
  const std::size_t n = args[0].size();
  check_tuple_size(args.size(), n);
  const std::size_t N = n * n;
  std::vector<std::vector<Poly>> stacked(N, std::vector<Poly>(N));
  for (std::size_t h = 0; h < N; ++h) {
    if (args[h].size() != n) throw std::invalid_argument("discriminant: size mismatch");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) stacked[h][a * n + b] = args[h].at(a, b);
  }
  return poly_det(stacked);
}

Rational discriminant_at(const std::vector<RationalMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("discriminant: no arguments");
  const std::size_t n = args[0].size();
  check_tuple_size(args.size(), n);
  const std::size_t N = n * n;
  RationalMatrix stacked(N);
  for (std::size_t h = 0; h < N; ++h) {
    if (args[h].size() != n) throw std::invalid_argument("discriminant: size mismatch");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) stacked.at(h, a * n + b) = args[h].at(a, b);
  }
  return stacked.det();
}

Poly generic_discriminant(int n) {
  const std::size_t N = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<PolyMatrix> args;
  args.reserve(N);
  for (std::size_t h = 1; h <= N; ++h)
    args.push_back(make_generic_matrix(static_cast<int>(h), n));
  return discriminant(args);
}

/******** drop-one-column minors of the generic stack ********/

namespace {

// All m x m minors of the m x n^2 stack of X_1..X_m (m = n^2-1), indexed by
// the dropped column.  One forward determinant DP over column subsets; the
// subset size equals the number of rows consumed, so levels can be freed as
// soon as the next one is built.
std::vector<Poly> drop_column_minors(int n) {
  if (n < 2) throw std::invalid_argument("drop_column_minors: n >= 2 required");
  if (n > 3) throw BudgetExceeded("drop_column_minors: n > 3 exceeds the symbolic budget");
  const int N = n * n, m = N - 1;
  std::vector<std::vector<Poly>> row(static_cast<std::size_t>(m));
  for (int h = 1; h <= m; ++h) {
    PolyMatrix x = make_generic_matrix(h, n);
    auto& r = row[static_cast<std::size_t>(h - 1)];
    r.resize(static_cast<std::size_t>(N));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        r[static_cast<std::size_t>(a * n + b)] =
            x.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }

  std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(m) + 1);
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    int k = __builtin_popcount(mask);
    if (k <= m) level[static_cast<std::size_t>(k)].push_back(mask);
  }

  std::vector<Poly> dp(1u << N);
  dp[0] = Poly(Rational(1));
  for (int k = 0; k < m; ++k) {
    for (std::uint32_t mask : level[static_cast<std::size_t>(k)]) {
      if (dp[mask].is_zero()) continue;
      for (int c = 0; c < N; ++c) {
        if (mask & (1u << c)) continue;
        int pos = __builtin_popcount(mask & ((1u << c) - 1));
        Rational sign = ((k + pos) % 2 == 0) ? Rational(1) : Rational(-1);
        dp[mask | (1u << c)] += (row[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] *
                                 dp[mask]).scaled(sign);
      }
      dp[mask] = Poly();  // free the consumed level
    }
  }

  const std::uint32_t full = (1u << N) - 1;
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int c = 0; c < N; ++c) out.push_back(std::move(dp[full ^ (1u << c)]));
  return out;
}

int dropped_column(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("delta_minor: 1-based indices in 1..n");
  return (i - 1) * n + (j - 1);
}

}  // namespace

Poly delta_minor(int i, int j, int n) {
  return drop_column_minors(n)[static_cast<std::size_t>(dropped_column(i, j, n))];
}

int delta_minor_sign(int i, int j, int n) {
  const int N = n * n;
  const int c = dropped_column(i, j, n);
  // Expansion of the stacked determinant along the appended unit row: the
  // unit sits at (row N-1, column c), so the cofactor sign is (-1)^{N-1+c}.
  const int sign = ((N - 1 + c) % 2 == 0) ? 1 : -1;

  std::vector<PolyMatrix> args;
  for (int h = 1; h <= N - 1; ++h) args.push_back(make_generic_matrix(h, n));
  args.push_back(PolyMatrix::matrix_unit(static_cast<std::size_t>(n),
                                         static_cast<std::size_t>(i),
                                         static_cast<std::size_t>(j)));
  Poly lhs = delta_minor(i, j, n);
  Poly rhs = discriminant(args).scaled(Rational(sign));
  if (!(lhs == rhs))
    throw CertificationError("delta_minor_sign: computed sign fails the exact comparison");
  return sign;
}

/******** Y and its characteristic coefficients ********/

PolyMatrix build_Y(int n, int max_n) {
  if (n < 2) throw std::invalid_argument("build_Y: n >= 2 required");
  if (n > max_n)
    throw BudgetExceeded("build_Y: n beyond the allowed bound (raise max_n explicitly)");
  const int N = n * n;
  std::vector<Poly> minors = drop_column_minors(n);
  PolyMatrix y(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // entry (i,j) is Delta(X_1..X_m, e_ji); rebuild it from the minor with
      // the (j,i) column dropped and the unit-row cofactor sign.
      const int c = dropped_column(j, i, n);
      const int sign = ((N - 1 + c) % 2 == 0) ? 1 : -1;
      y.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          minors[static_cast<std::size_t>(c)].scaled(Rational(sign));
    }
  return y;
}

TraceIdentityReport trace_identity_check(int n, int trials, std::uint64_t seed, int max_n) {
  if (n < 2) throw std::invalid_argument("trace_identity_check: n >= 2 required");
  TraceIdentityReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  const int N = n * n, m = N - 1;

  // Symbolic side: tr(Y e_ij) == Delta(X_1..X_m, e_ij) over every unit.
  rep.symbolic_ok = true;
  if (n <= max_n) {
    PolyMatrix y = build_Y(n, max_n);
    std::vector<PolyMatrix> args;
    for (int h = 1; h <= m; ++h) args.push_back(make_generic_matrix(h, n));
    args.push_back(PolyMatrix());  // slot for the unit
    for (int i = 1; i <= n && rep.symbolic_ok; ++i)
      for (int j = 1; j <= n && rep.symbolic_ok; ++j) {
        PolyMatrix unit = PolyMatrix::matrix_unit(static_cast<std::size_t>(n),
                                                  static_cast<std::size_t>(i),
                                                  static_cast<std::size_t>(j));
        args.back() = unit;
        if (!((y * unit).trace() == discriminant(args))) rep.symbolic_ok = false;
      }
  }

  // Numeric side: random integer tuples and Z, fully exact arithmetic.
  Rng rng(seed);
  rep.numeric_ok = true;
  for (int t = 0; t < trials && rep.numeric_ok; ++t) {
    std::vector<RationalMatrix> a;
    for (int h = 0; h < m; ++h) a.push_back(random_integer_matrix(rng, static_cast<std::size_t>(n), 5));
    RationalMatrix z = random_integer_matrix(rng, static_cast<std::size_t>(n), 5);

    RationalMatrix ya(static_cast<std::size_t>(n));
    std::vector<RationalMatrix> args = a;
    args.push_back(RationalMatrix(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        RationalMatrix unit(static_cast<std::size_t>(n));
        unit.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = 1;
        args.back() = unit;
        ya.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
            discriminant_at(args);
      }

    args.back() = z;
    if ((ya * z).trace() != discriminant_at(args)) rep.numeric_ok = false;
  }
  return rep;
}

CharCoeffReport char_coeff_identities(int n) {
  if (n != 2)
    throw BudgetExceeded("char_coeff_identities: symbolic verification is n = 2 only");
  CharCoeffReport rep;
  rep.n = n;
  PolyMatrix y = build_Y(n, n);
  std::vector<Poly> c = char_poly_coeffs(y);

  rep.c1_is_minus_trace = (c[0] == -y.trace());

  std::vector<PolyMatrix> args;
  for (int h = 1; h <= n * n - 1; ++h) args.push_back(make_generic_matrix(h, n));
  args.push_back(PolyMatrix::identity(static_cast<std::size_t>(n)));
  rep.c1_is_minus_disc_at_id = (c[0] == -discriminant(args));

  PolyMatrix ch = y * y + y.scaled_poly(c[0]) +
                  PolyMatrix::scalar(static_cast<std::size_t>(n), c[1]);
  rep.cayley_hamilton = ch.is_zero();
  return rep;
}

IndependenceReport algebraic_independence_probe(const std::vector<Poly>& polys,
                                                std::uint64_t seed, int max_attempts,
                                                long long bound) {
  if (polys.empty()) throw std::invalid_argument("algebraic_independence_probe: empty input");
  std::set<VarIndex> varset;
  for (auto& p : polys) {
    if (p.is_zero() || p.terms().rbegin()->first.degree() < 1)
      throw std::invalid_argument("algebraic_independence_probe: inputs must be nonconstant");
    for (auto& [mon, coeff] : p.terms())
      for (auto& [v, e] : mon.terms()) varset.insert(v);
  }
  std::vector<VarIndex> vars(varset.begin(), varset.end());

  IndependenceReport rep;
  rep.seed = seed;
  rep.wanted_rank = static_cast<Index>(polys.size());

  std::vector<std::vector<Poly>> jac(polys.size(), std::vector<Poly>(vars.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < vars.size(); ++c) jac[r][c] = polys[r].partial(vars[c]);

  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ++rep.attempts;
    std::map<VarIndex, Rational> point;
    for (auto& v : vars) point[v] = Rational(rng.integer(bound, true));
    auto at = [&](const VarIndex& v) { return point.at(v); };

    SparseMatrix a(static_cast<Index>(polys.size()), static_cast<Index>(vars.size()));
    for (std::size_t r = 0; r < polys.size(); ++r)
      for (std::size_t c = 0; c < vars.size(); ++c) {
        Rational val = jac[r][c].eval(at);
        if (val != 0) a.set(static_cast<Index>(r), static_cast<Index>(c), val);
      }
    rep.last_rank = rank(a);
    if (rep.last_rank == rep.wanted_rank) {
      rep.independent = true;
      return rep;
    }
  }
  rep.independent = false;  // inconclusive; permanent for dependent inputs
  return rep;
}

/******** standard polynomials ********/

std::vector<std::pair<int, Word>> standard_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("standard_polynomial: m >= 1 required");
  if (m > 8) throw BudgetExceeded("standard_polynomial: m capped at 8 (m! words)");
  std::vector<std::pair<int, Word>> out;
  Word w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    out.push_back({inv % 2 == 0 ? 1 : -1, w});
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

// Shared-prefix signed sum over all permutations: picking the t-th smallest
// unused letter flips the sign t times.
template <typename Mat>
void standard_dfs(const std::vector<Mat>& args, std::vector<bool>& used, const Mat& prefix,
                  int sign, int depth, Mat& acc) {
  const int m = static_cast<int>(args.size());
  if (depth == m) {
    acc = acc + prefix.scaled(Rational(sign));
    return;
  }
  int t = 0;
  for (int l = 0; l < m; ++l) {
    if (used[static_cast<std::size_t>(l)]) continue;
    used[static_cast<std::size_t>(l)] = true;
    standard_dfs(args, used, prefix * args[static_cast<std::size_t>(l)],
                 (t % 2 == 0) ? sign : -sign, depth + 1, acc);
    used[static_cast<std::size_t>(l)] = false;
    ++t;
  }
}

template <typename Mat>
Mat eval_standard_generic(const std::vector<Mat>& args, std::size_t n) {
  Mat acc(n);
  std::vector<bool> used(args.size(), false);
  Mat prefix = Mat::identity(n);
  standard_dfs(args, used, prefix, 1, 0, acc);
  return acc;
}

}  // namespace

PolyMatrix eval_standard(int m, int n) {
  if (m < 1) throw std::invalid_argument("eval_standard: m >= 1 required");
  if (n < 2) throw std::invalid_argument("eval_standard: n >= 2 required");
  if (m > 8) throw BudgetExceeded("eval_standard: m > 8 exceeds the m! budget");
  std::vector<PolyMatrix> args;
  for (int h = 1; h <= m; ++h) args.push_back(make_generic_matrix(h, n));
  return eval_standard_generic(args, static_cast<std::size_t>(n));
}

PolyMatrix eval_standard_at(const std::vector<PolyMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("eval_standard_at: no arguments");
  if (args.size() > 8) throw BudgetExceeded("eval_standard_at: m > 8 exceeds the m! budget");
  return eval_standard_generic(args, args[0].size());
}

RationalMatrix eval_standard_at(const std::vector<RationalMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("eval_standard_at: no arguments");
  if (args.size() > 10) throw BudgetExceeded("eval_standard_at: m > 10 exceeds the m! budget");
  return eval_standard_generic(args, args[0].size());
}

AmitsurLevitzkiReport amitsur_levitzki_check(int m, int n) {
  AmitsurLevitzkiReport rep;
  rep.m = m;
  rep.n = n;
  rep.f_is_zero = eval_standard(m, n).is_zero();
  rep.expected_zero = (m >= 2 * n);
  return rep;
}

bool standard_reduction_check(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("standard_reduction_check: odd m >= 3 required");
  // Substitute 1 for the first letter on abstract signed words, then compare
  // with F_{m-1}; purely combinatorial, no matrix evaluation.  For even m the
  // substitution collapses to zero instead, so the check is odd-only.
  std::map<Word, long long> reduced;
  for (auto& [sign, w] : standard_polynomial(m)) {
    Word r;
    r.reserve(w.size() - 1);
    for (int l : w)
      if (l != 1) r.push_back(l - 1);
    reduced[r] += sign;
  }
  std::map<Word, long long> expect;
  for (auto& [sign, w] : standard_polynomial(m - 1)) expect[w] += sign;
  for (auto it = reduced.begin(); it != reduced.end();)
    it = (it->second == 0) ? reduced.erase(it) : std::next(it);
  for (auto it = expect.begin(); it != expect.end();)
    it = (it->second == 0) ? expect.erase(it) : std::next(it);
  return reduced == expect;
}

RationalMatrix matrix_unit_probe(int m, int n) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("matrix_unit_probe: m must be even and >= 2");
  const int r = m / 2 + 1;
  if (r > n) throw std::invalid_argument("matrix_unit_probe: need n >= m/2 + 1");
  auto unit = [&](int i, int j) {
    RationalMatrix u(static_cast<std::size_t>(n));
    u.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return u;
  };
  // e_{1,2}, e_{2,2}, e_{2,3}, e_{3,3}, ..., e_{r-1,r}, e_{r,1}
  std::vector<RationalMatrix> args;
  args.push_back(unit(1, 2));
  for (int k = 2; k <= r - 1; ++k) {
    args.push_back(unit(k, k));
    args.push_back(unit(k, k + 1));
  }
  args.push_back(unit(r, 1));
  return eval_standard_at(args);
}

EigenProbeReport eigenvalue_multiplicity_probe(const PolyMatrix& e, int trials,
                                               std::uint64_t seed, long long bound) {
  EigenProbeReport rep;
  rep.trials = trials;
  rep.seed = seed;

  std::set<VarIndex> varset;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      for (auto& [mon, c] : e.at(i, j).terms())
        for (auto& [v, ex] : mon.terms()) varset.insert(v);
  std::vector<VarIndex> vars(varset.begin(), varset.end());

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::map<VarIndex, Rational> point;
    for (auto& v : vars) point[v] = Rational(rng.integer(bound, true));
    RationalMatrix a = e.eval([&](const VarIndex& v) { return point.at(v); });
    auto profile = root_multiplicity_profile(char_poly(a));
    bool simple = false;
    for (auto& [mult, deg] : profile)
      if (mult == 1 && deg > 0) simple = true;
    if (simple && !rep.found_simple) {
      rep.found_simple = true;
      rep.witness_trial = t;
      rep.witness_profile = profile;
    }
  }
  return rep;
}

/******** membership of discriminant powers ********/

namespace {

// Evaluates every word of the multidegree at an integer point, sharing
// prefixes.  Leaves appear in the words' lex order; `emit` receives the
// running word index and the n x n integer value.
void eval_words_at_point(const std::vector<Word>& words, int m, int n,
                         const std::vector<long long>& point_vals,
                         const std::function<void(std::size_t, const std::vector<long long>&)>& emit) {
  if (words.empty()) return;
  MultiDegree left(static_cast<std::size_t>(m), 0);
  for (int l : words[0]) ++left[static_cast<std::size_t>(l - 1)];
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  std::vector<long long> prefix(nn, 0);
  for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i * n + i)] = 1;

  std::size_t counter = 0;
  Word cur;
  auto rec = [&](auto&& self, const std::vector<long long>& pre, std::int64_t rest) -> void {
    if (rest == 0) {
      // Leaves visit the multiset in lex order, matching the words list; the
      // comparison keeps the pairing airtight.
      if (counter >= words.size() || cur != words[counter])
        throw CertificationError("eval_words_at_point: enumeration order mismatch");
      emit(counter++, pre);
      return;
    }
    for (int l = 1; l <= m; ++l) {
      if (left[static_cast<std::size_t>(l - 1)] == 0) continue;
      --left[static_cast<std::size_t>(l - 1)];
      cur.push_back(l);
      std::vector<long long> nxt(nn, 0);
      const long long* g = &point_vals[static_cast<std::size_t>(l - 1) * nn];
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          long long v = pre[static_cast<std::size_t>(i * n + k)];
          if (v == 0) continue;
          for (int j = 0; j < n; ++j)
            nxt[static_cast<std::size_t>(i * n + j)] += v * g[static_cast<std::size_t>(k * n + j)];
        }
      self(self, nxt, rest - 1);
      cur.pop_back();
      ++left[static_cast<std::size_t>(l - 1)];
    }
  };
  std::int64_t total = 0;
  for (auto x : left) total += x;
  rec(rec, prefix, total);
  if (counter != words.size())
    throw CertificationError("eval_words_at_point: enumeration count mismatch");
}

struct ModSolveResult {
  bool consistent = false;
  std::vector<Index> pivot_cols;
  std::vector<std::uint64_t> solution;  // per pivot col, mod p
};

// Dense row echelon + back substitution mod p; free variables pinned to 0.
ModSolveResult dense_solve_mod(const std::vector<std::vector<long long>>& rows,
                               const std::vector<long long>& rhs, std::uint64_t p) {
  PrimeField f{p};
  const std::size_t R = rows.size();
  const std::size_t C = R ? rows[0].size() : 0;
  std::vector<std::vector<std::uint64_t>> a(R, std::vector<std::uint64_t>(C + 1));
  auto red = [&](long long v) -> std::uint64_t {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
  };
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) a[r][c] = red(rows[r][c]);
    a[r][C] = red(rhs[r]);
  }

  ModSolveResult out;
  std::vector<std::size_t> pivot_row_of;
  std::size_t filled = 0;
  for (std::size_t col = 0; col < C && filled < R; ++col) {
    std::size_t pr = filled;
    while (pr < R && a[pr][col] == 0) ++pr;
    if (pr == R) continue;
    std::swap(a[filled], a[pr]);
    std::uint64_t inv = f.inv(a[filled][col]);
    for (std::size_t c = col; c <= C; ++c) a[filled][c] = f.mul(a[filled][c], inv);
    for (std::size_t r = filled + 1; r < R; ++r) {
      std::uint64_t x = a[r][col];
      if (x == 0) continue;
      std::uint64_t neg = p - x;
      auto& tr = a[r];
      auto& pv = a[filled];
      for (std::size_t c = col; c <= C; ++c)
        tr[c] = (tr[c] + neg * pv[c]) % p;
    }
    out.pivot_cols.push_back(static_cast<Index>(col));
    pivot_row_of.push_back(filled);
    ++filled;
  }
  for (std::size_t r = filled; r < R; ++r)
    if (a[r][C] != 0) return out;  // inconsistent

  out.consistent = true;
  std::vector<std::uint64_t> x(C, 0);
  for (std::size_t k = out.pivot_cols.size(); k-- > 0;) {
    std::size_t row = pivot_row_of[k];
    std::size_t col = static_cast<std::size_t>(out.pivot_cols[k]);
    std::uint64_t val = a[row][C];
    for (std::size_t c = col + 1; c < C; ++c)
      if (a[row][c] && x[c]) val = f.sub(val, f.mul(a[row][c], x[c]));
    x[col] = val;
  }
  out.solution.reserve(out.pivot_cols.size());
  for (Index col : out.pivot_cols) out.solution.push_back(x[static_cast<std::size_t>(col)]);
  return out;
}

}  // namespace

DeltaMembershipReport delta_power_membership(int n, int power, std::uint64_t seed,
                                             const Budget& budget, const LinAlgOptions& opts) {
  if (n < 2) throw std::invalid_argument("delta_power_membership: n >= 2 required");
  if (power < 1 || power > 2)
    throw std::invalid_argument("delta_power_membership: power must be 1 or 2");
  const int m = n * n;
  RingId ring{RingKind::G, m, n};
  ring.validate();
  MultiDegree d(static_cast<std::size_t>(m), power);
  std::vector<Word> words = words_of_multidegree(d, budget);

  DeltaMembershipReport rep;
  rep.n = n;
  rep.power = power;
  rep.word_count = words.size();
  rep.seed = seed;

  Poly delta = generic_discriminant(n);
  Poly target_poly = (power == 1) ? delta : delta * delta;
  PolyMatrix target = PolyMatrix::scalar(static_cast<std::size_t>(n), target_poly);

  if (power == 1) {
    std::vector<PolyMatrix> evals;
    evals.reserve(words.size());
    for (auto& w : words) evals.push_back(eval_word(w, m, n));
    std::vector<PolyMatrix> all = evals;
    all.push_back(target);
    CoordinateIndex idx = CoordinateIndex::build(all);
    std::vector<SparseVector> cols;
    cols.reserve(evals.size());
    for (auto& e : evals) cols.push_back(*idx.coordinates(e));
    auto res = membership(*idx.coordinates(target), cols, idx.size(), opts);
    rep.member = res.has_value();
    rep.certified = true;
    if (res)
      rep.coefficients = *res;
    else
      rep.detail = "outside the word span (exact rejection)";
    return rep;
  }

  /******** power 2: compress through integer points, lift, certify ********/

  const std::size_t C = words.size();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t nvals = static_cast<std::size_t>(m) * nn;
  const int max_primes = 25;

  std::map<std::size_t, PolyMatrix> sym_eval;  // lazy symbolic word evaluations
  auto word_eval_sym = [&](std::size_t j) -> const PolyMatrix& {
    auto it = sym_eval.find(j);
    if (it == sym_eval.end()) it = sym_eval.emplace(j, eval_word(words[j], m, n)).first;
    return it->second;
  };

  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const std::size_t pts = (C / nn + 64) << attempt;
    const std::size_t R = pts * nn;

    std::vector<std::vector<long long>> rows(R, std::vector<long long>(C, 0));
    std::vector<long long> rhs(R, 0);
    for (std::size_t t = 0; t < pts; ++t) {
      std::vector<long long> vals(nvals);
      for (auto& v : vals) v = rng.integer(5, true);

      std::vector<RationalMatrix> at;
      for (int h = 0; h < m; ++h) {
        RationalMatrix a(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < nn; ++k)
          a.at(k / static_cast<std::size_t>(n), k % static_cast<std::size_t>(n)) =
              Rational(vals[static_cast<std::size_t>(h) * nn + k]);
        at.push_back(std::move(a));
      }
      Rational dv = discriminant_at(at);
      long long dint = num(dv).convert_to<long long>();  // integral input, so den == 1
      for (std::size_t pos = 0; pos < nn; ++pos)
        rhs[t * nn + pos] = (pos % (static_cast<std::size_t>(n) + 1) == 0) ? dint * dint : 0;

      eval_words_at_point(words, m, n, vals, [&](std::size_t j, const std::vector<long long>& val) {
        for (std::size_t pos = 0; pos < nn; ++pos) rows[t * nn + pos][j] = val[pos];
      });
    }

    std::vector<Index> pivot_cols;
    std::vector<CrtAccumulator> crt;
    std::vector<Rational> last_lift;
    bool have_last_lift = false;
    int inconsistent_primes = 0;

    for (int pi = 0; pi < max_primes; ++pi) {
      std::uint64_t p = nth_prime31(opts.prime_index + static_cast<std::size_t>(pi));
      ModSolveResult sol = dense_solve_mod(rows, rhs, p);
      if (!sol.consistent) {
        if (++inconsistent_primes >= 2) {
          rep.member = false;
          rep.certified = false;
          rep.detail = "sampled system inconsistent modulo two primes (no exact certificate)";
          return rep;
        }
        continue;
      }
      if (pivot_cols.empty()) {
        pivot_cols = sol.pivot_cols;
        crt.assign(pivot_cols.size(), CrtAccumulator{});
      } else if (sol.pivot_cols != pivot_cols) {
        continue;  // unusable prime: different pivot structure
      }
      for (std::size_t k = 0; k < pivot_cols.size(); ++k)
        crt[k].add(sol.solution[k], p);

      // Lift every pivot coordinate; certify once two consecutive lifts agree.
      std::vector<Rational> lift(pivot_cols.size());
      bool lifted = true;
      for (std::size_t k = 0; k < pivot_cols.size() && lifted; ++k) {
        auto rc = rational_reconstruct(crt[k].value, crt[k].modulus);
        if (!rc)
          lifted = false;
        else
          lift[k] = *rc;
      }
      if (!lifted) continue;
      if (!have_last_lift || lift != last_lift) {
        last_lift = lift;
        have_last_lift = true;
        continue;
      }

      PolyMatrix acc(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        if (lift[k] == 0) continue;
        acc = acc + word_eval_sym(static_cast<std::size_t>(pivot_cols[k])).scaled(lift[k]);
      }
      if (acc == target) {
        rep.member = true;
        rep.certified = true;
        rep.coefficients.assign(C, Rational(0));
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
          rep.coefficients[static_cast<std::size_t>(pivot_cols[k])] = lift[k];
        return rep;
      }
      break;  // stable lift fails symbolically: need more sample points
    }
  }
  throw BudgetExceeded(
      "delta_power_membership: sampled lift did not certify within the retry budget");
}

}  // namespace genmat
