#include "genmat/gl_action.hpp"

#include <algorithm>
#include <sstream>

namespace genmat {

GroupElement::GroupElement(RationalMatrix g) : mat(std::move(g)) {
  if (mat.size() == 0) throw std::invalid_argument("GroupElement: empty matrix");
  if (mat.det() == 0) throw std::invalid_argument("GroupElement: matrix is singular");
}

namespace {

std::vector<std::vector<Rational>> coef_of(const GroupElement& g) {
  const std::size_t m = g.m();
  std::vector<std::vector<Rational>> c(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i][j] = g.mat.at(i, j);
  return c;
}

Poly raising_rule(const VarIndex& v, int i) {
  if (v.h == i + 1) return Poly::var({i, v.i, v.j});
  return Poly();
}

}  // namespace

Poly act_gl(const GroupElement& g, const Poly& e) { return e.substitute_layers(coef_of(g)); }

PolyMatrix act_gl(const GroupElement& g, const PolyMatrix& e) {
  return e.substitute_layers(coef_of(g));
}

Poly apply_raising(const Poly& e, int i) {
  if (i < 1) throw std::invalid_argument("apply_raising: i must be >= 1");
  return e.derive([i](const VarIndex& v) { return raising_rule(v, i); });
}

PolyMatrix apply_raising(const PolyMatrix& e, int i) {
  if (i < 1) throw std::invalid_argument("apply_raising: i must be >= 1");
  return e.derive([i](const VarIndex& v) { return raising_rule(v, i); });
}

/******** highest-weight spaces ********/

PolyMatrix InvariantBasis::element(std::size_t k) const {
  return matrix_from_coordinates(cell.coords, basis[k], static_cast<std::size_t>(cell.ring.n));
}

std::string InvariantBasis::combo_str(std::size_t k) const {
  const auto& combo = symbol_combos[k];
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < combo.size(); ++s) {
    if (combo[s] == 0) continue;
    Rational c = combo[s];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (a != 1) os << rat_str(a) << "*";
    os << cell.symbols[s].str();
  }
  if (first) os << "0";
  return os.str();
}

InvariantBasis highest_weight_space(const RingId& ring, const MultiDegree& d,
                                    const Budget& budget, const LinAlgOptions& opts) {
  InvariantBasis out;
  out.cell = graded_component_basis(ring, d, budget, opts);
  const GradedBasis& cell = out.cell;
  const std::size_t n = static_cast<std::size_t>(ring.n);

  // Generators of the component (with matrix representatives): symbols for
  // G/T, the already-intersected central basis for ZG/ZT.
  std::vector<SparseVector> gen_vectors;
  std::vector<PolyMatrix> gen_matrices;
  if (ring.central()) {
    gen_vectors = cell.basis;
    for (std::size_t k = 0; k < cell.basis.size(); ++k) {
      PolyMatrix e(n);
      for (auto& [slot, val] : cell.basis[k]) {
        auto& key = cell.coords.keys()[static_cast<std::size_t>(slot)];
        e.at(key.first / n, key.first % n).add_term(key.second, val);
      }
      gen_matrices.push_back(std::move(e));
    }
  } else {
    gen_vectors = cell.sym_vectors;
    for (auto& s : cell.symbols) gen_matrices.push_back(eval_trace_monomial(s, ring.m, ring.n));
  }

  // Rows of the stacked raising system, grouped per (operator, target key).
  using Key = std::pair<std::size_t, Monomial>;
  std::vector<std::map<Key, SparseVector, CoordinateIndex::KeyLess>> raised(
      static_cast<std::size_t>(ring.m > 0 ? ring.m - 1 : 0));
  for (std::size_t s = 0; s < gen_matrices.size(); ++s) {
    for (int i = 1; i < ring.m; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;  // raising kills the whole cell
      PolyMatrix r = apply_raising(gen_matrices[s], i);
      auto& rows = raised[static_cast<std::size_t>(i - 1)];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (auto& [mon, c] : r.at(a, b).terms())
            rows[{a * n + b, mon}].push_back({static_cast<Index>(s), c});
    }
  }
  gen_matrices.clear();  // evaluations are bulky; only vectors are needed now

  SparseMatrix stacked;
  stacked.cols = static_cast<Index>(gen_vectors.size());
  for (auto& rows : raised)
    for (auto& [key, row] : rows) {
      stacked.row.push_back(row);
      ++stacked.rows;
    }

  std::vector<SparseVector> alpha = kernel(stacked, opts);

  // Quotient by relations among the generators: the invariant subspace of
  // the component is the span of the images, made canonical by one rref.
  std::vector<SparseVector> image_rows;
  for (auto& a : alpha) {
    SparseVector acc;
    for (auto& [s, coef] : a)
      acc = sv_axpy(Rational(1), acc, coef, gen_vectors[static_cast<std::size_t>(s)]);
    if (!acc.empty()) image_rows.push_back(std::move(acc));
  }
  SparseMatrix image(static_cast<Index>(image_rows.size()), cell.coords.size());
  image.row = std::move(image_rows);
  out.basis = rref(image).rows;

  for (auto& b : out.basis) {
    auto combo = membership(b, cell.sym_vectors, cell.coords.size(), opts);
    if (!combo)
      throw std::logic_error("highest_weight_space: basis vector escaped the symbol span");
    out.symbol_combos.push_back(std::move(*combo));
  }
  return out;
}

InvariantBasis sl_invariants(const RingId& ring, std::int64_t r, const Budget& budget,
                             const LinAlgOptions& opts) {
  if (r < 1) throw std::invalid_argument("sl_invariants: r must be >= 1");
  MultiDegree d(static_cast<std::size_t>(ring.m), r);
  return highest_weight_space(ring, d, budget, opts);
}

InvariantBasis centrality_filter(const InvariantBasis& b, const LinAlgOptions& opts) {
  InvariantBasis out;
  out.cell = b.cell;
  const std::size_t n = static_cast<std::size_t>(b.cell.ring.n);

  // Scalar-matrix constraints over coefficients of the given basis vectors;
  // same construction as the ZG/ZT component intersection.
  const Index per_mono = static_cast<Index>(n * n - 1);
  std::map<Monomial, Index> mono_base;
  for (auto& key : b.cell.coords.keys()) mono_base.emplace(key.second, 0);
  {
    Index next = 0;
    for (auto& [mon, base] : mono_base) { base = next; next += per_mono; }
  }
  std::map<std::pair<Index, Index>, Rational> entries;
  for (std::size_t s = 0; s < b.basis.size(); ++s) {
    for (auto& [slot, val] : b.basis[s]) {
      auto& key = b.cell.coords.keys()[static_cast<std::size_t>(slot)];
      const std::size_t i = key.first / n, j = key.first % n;
      const Index base = mono_base[key.second];
      auto add = [&](Index crow, const Rational& v) {
        auto [it, fresh] = entries.emplace(std::make_pair(crow, static_cast<Index>(s)), v);
        if (!fresh) it->second += v;
      };
      if (i != j) add(base + static_cast<Index>(i * n + j) - 1, val);
      else if (i == 0)
        for (std::size_t k = 1; k < n; ++k) add(base + static_cast<Index>(k * n + k) - 1, -val);
      else add(base + static_cast<Index>(i * n + i) - 1, val);
    }
  }
  SparseMatrix c(static_cast<Index>(mono_base.size()) * per_mono, static_cast<Index>(b.basis.size()));
  for (auto& [rc, v] : entries)
    if (v != 0) c.row[static_cast<std::size_t>(rc.first)].push_back({rc.second, v});

  std::vector<SparseVector> central_rows;
  for (auto& combo : kernel(c, opts)) {
    SparseVector acc;
    for (auto& [s, coef] : combo)
      acc = sv_axpy(Rational(1), acc, coef, b.basis[static_cast<std::size_t>(s)]);
    if (!acc.empty()) central_rows.push_back(std::move(acc));
  }
  SparseMatrix rows(static_cast<Index>(central_rows.size()), b.cell.coords.size());
  rows.row = std::move(central_rows);
  out.basis = rref(rows).rows;
  for (auto& v : out.basis) {
    auto combo = membership(v, b.cell.sym_vectors, b.cell.coords.size(), opts);
    if (!combo) throw std::logic_error("centrality_filter: vector escaped the symbol span");
    out.symbol_combos.push_back(std::move(*combo));
  }
  return out;
}

/******** probes ********/

RationalMatrix random_integer_matrix(Rng& rng, std::size_t n, long long bound) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rational(rng.integer(bound, false));
  return a;
}

RationalMatrix random_invertible_matrix(Rng& rng, std::size_t n, long long bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalMatrix a = random_integer_matrix(rng, n, bound);
    if (a.det() != 0) return a;
  }
  throw std::runtime_error("random_invertible_matrix: no invertible sample found");
}

RationalMatrix random_unimodular_matrix(Rng& rng, std::size_t n, int steps) {
  RationalMatrix a = RationalMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.below(n));
    std::size_t j = static_cast<std::size_t>(rng.below(n));
    if (i == j) continue;
    RationalMatrix t = RationalMatrix::identity(n);
    t.at(i, j) = Rational(rng.integer(3, true));
    a = a * t;
  }
  return a;
}

namespace {

std::function<Rational(const VarIndex&)> point_of(const std::vector<RationalMatrix>& tuple) {
  return [&tuple](const VarIndex& v) -> Rational {
    const auto& a = tuple[static_cast<std::size_t>(v.h - 1)];
    return a.at(static_cast<std::size_t>(v.i - 1), static_cast<std::size_t>(v.j - 1));
  };
}

}  // namespace

ProbeReport pgl_equivariance_probe(const PolyMatrix& f, int m, int trials, std::uint64_t seed,
                                   long long bound) {
  ProbeReport rep;
  rep.trials = trials;
  rep.seed = seed;
  Rng rng(seed);
  const std::size_t n = f.size();
  for (int t = 0; t < trials; ++t) {
    std::vector<RationalMatrix> a;
    for (int h = 0; h < m; ++h) a.push_back(random_integer_matrix(rng, n, bound));
    RationalMatrix c = random_invertible_matrix(rng, n, bound);
    RationalMatrix cinv = *c.inverse();
    std::vector<RationalMatrix> conj;
    for (auto& x : a) conj.push_back(c * x * cinv);
    RationalMatrix lhs = f.eval(point_of(conj));
    RationalMatrix rhs = c * f.eval(point_of(a)) * cinv;
    if (lhs != rhs) {
      rep.ok = false;
      std::ostringstream os;
      os << "equivariance fails at trial " << t;
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

namespace {

template <typename Elem>
ProbeReport det_semiinv_impl(const Elem& e, int m, int power, int trials, std::uint64_t seed,
                             long long bound) {
  ProbeReport rep;
  rep.trials = trials;
  rep.seed = seed;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    GroupElement g(random_invertible_matrix(rng, static_cast<std::size_t>(m), bound));
    Rational dg = g.mat.det();
    Rational factor(1);
    for (int k = 0; k < power; ++k) factor *= dg;
    Elem lhs = act_gl(g, e);
    Elem rhs = e.scaled(factor);
    if (!(lhs == rhs)) {
      rep.ok = false;
      std::ostringstream os;
      os << "semiinvariance fails at trial " << t << " (det = " << rat_str(dg) << ")";
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace

ProbeReport det_semiinvariance_probe(const Poly& e, int m, int power, int trials,
                                     std::uint64_t seed, long long bound) {
  return det_semiinv_impl(e, m, power, trials, seed, bound);
}

ProbeReport det_semiinvariance_probe(const PolyMatrix& e, int m, int power, int trials,
                                     std::uint64_t seed, long long bound) {
  return det_semiinv_impl(e, m, power, trials, seed, bound);
}

/******** PI-degree lower bound ********/

namespace {

// Incremental span of flattened n x n matrices; insert returns true when the
// matrix enlarged the span.
class MatrixSpan {
 public:
  explicit MatrixSpan(std::size_t n) : n_(n) {}

  bool insert(const RationalMatrix& a) {
    SparseVector v;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (a.at(i, j) != 0) v.push_back({static_cast<Index>(i * n_ + j), a.at(i, j)});
    sv_make_primitive(v);
    while (!v.empty()) {
      Index lead = v.front().first;
      auto it = echelon_.find(lead);
      if (it == echelon_.end()) {
        echelon_.emplace(lead, v);
        return true;
      }
      const SparseVector& p = it->second;
      v = sv_axpy(p.front().second, v, -v.front().second, p);
      sv_make_primitive(v);
    }
    return false;
  }

  std::int64_t dim() const { return static_cast<std::int64_t>(echelon_.size()); }

 private:
  std::size_t n_;
  std::map<Index, SparseVector> echelon_;
};

}  // namespace

PiDegreeReport pi_degree_lower_bound_probe(const RingId& ring, int max_r, std::uint64_t seed,
                                           long long bound, const Budget& budget,
                                           const LinAlgOptions& opts) {
  ring.validate();
  PiDegreeReport rep;
  rep.seed = seed;
  const std::size_t n = static_cast<std::size_t>(ring.n);
  Rng rng(seed);
  std::vector<RationalMatrix> tuple;
  for (int h = 0; h < ring.m; ++h) tuple.push_back(random_integer_matrix(rng, n, bound));
  auto point = point_of(tuple);

  MatrixSpan span(n);
  std::vector<RationalMatrix> alg_basis;      // basis matrices of the generated algebra
  std::vector<RationalMatrix> generators;     // specialized invariants
  RationalMatrix id = RationalMatrix::identity(n);
  span.insert(id);
  alg_basis.push_back(id);

  auto close_algebra = [&]() {
    std::vector<RationalMatrix> work = alg_basis;
    while (!work.empty()) {
      RationalMatrix w = work.back();
      work.pop_back();
      for (auto& s : generators) {
        RationalMatrix p = s * w;
        if (span.insert(p)) {
          alg_basis.push_back(p);
          work.push_back(p);
        }
      }
    }
  };

  for (int r = 1; r <= max_r; ++r) {
    InvariantBasis inv = sl_invariants(ring, r, budget, opts);
    rep.dims_per_r.push_back(inv.dimension());
    for (std::size_t k = 0; k < inv.basis.size(); ++k)
      generators.push_back(inv.element(k).eval(point));
    close_algebra();
    rep.algebra_dim = span.dim();
    if (rep.algebra_dim == static_cast<std::int64_t>(n * n)) {
      rep.certified = ring.n;
      rep.reached_r = r;
      return rep;
    }
  }
  rep.certified = 1;
  return rep;
}

}  // namespace genmat
