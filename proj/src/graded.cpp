#include "genmat/graded.hpp"

#include <algorithm>

namespace genmat {

CoordinateIndex CoordinateIndex::build(const std::vector<PolyMatrix>& evals) {
  CoordinateIndex idx;
  std::map<std::pair<std::size_t, Monomial>, Index, KeyLess> seen;
  for (auto& e : evals) {
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (auto& [mon, c] : e.at(i, j).terms()) seen.emplace(std::make_pair(i * n + j, mon), 0);
  }
  for (auto& [key, slot] : seen) {
    slot = static_cast<Index>(idx.keys_.size());
    idx.keys_.push_back(key);
  }
  idx.slot_of_ = std::move(seen);
  return idx;
}

Index CoordinateIndex::slot(std::size_t pos, const Monomial& mon) const {
  auto it = slot_of_.find({pos, mon});
  return it == slot_of_.end() ? -1 : it->second;
}

std::optional<SparseVector> CoordinateIndex::coordinates(const PolyMatrix& p) const {
  SparseVector v;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [mon, c] : p.at(i, j).terms()) {
        Index s = slot(i * n + j, mon);
        if (s < 0) return std::nullopt;
        v.push_back({s, c});
      }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

void CoordinateIndex::append_key(std::size_t pos, const Monomial& mon) {
  auto key = std::make_pair(pos, mon);
  if (slot_of_.count(key)) throw std::invalid_argument("CoordinateIndex: duplicate key");
  slot_of_.emplace(key, static_cast<Index>(keys_.size()));
  keys_.push_back(key);
}

PolyMatrix matrix_from_coordinates(const CoordinateIndex& idx, const SparseVector& v,
                                   std::size_t n) {
  PolyMatrix e(n);
  for (auto& [slot, val] : v) {
    auto& key = idx.keys()[static_cast<std::size_t>(slot)];
    e.at(key.first / n, key.first % n).add_term(key.second, val);
  }
  return e;
}

std::optional<std::vector<Rational>> GradedBasis::express_in_symbols(
    const PolyMatrix& e, const LinAlgOptions& opts) const {
  if (sym_vectors.empty() && !symbols.empty())
    throw std::logic_error("express_in_symbols: symbol evaluations not available");
  auto v = coords.coordinates(e);
  if (!v) return std::nullopt;
  return membership(*v, sym_vectors, coords.size(), opts);
}

GradedBasis graded_component_basis(const RingId& ring, const MultiDegree& d,
                                   const Budget& budget, const LinAlgOptions& opts) {
  GradedBasis g;
  g.ring = ring;
  g.degree = d;
  g.symbols = spanning_set(ring, d, budget);

  std::vector<PolyMatrix> evals;
  evals.reserve(g.symbols.size());
  for (auto& s : g.symbols) evals.push_back(eval_trace_monomial(s, ring.m, ring.n));
  g.coords = CoordinateIndex::build(evals);
  for (auto& e : evals) g.sym_vectors.push_back(*g.coords.coordinates(e));

  // Greedy maximal independent symbol subset: pivot columns of the
  // (coords x symbols) matrix.
  SparseMatrix by_columns = SparseMatrix::from_columns(g.coords.size(), g.sym_vectors);
  g.pivot_symbols = rref(by_columns).pivot_cols;

  // Span rows for the canonical component basis.
  std::vector<SparseVector> span_rows = g.sym_vectors;
  if (ring.central()) {
    // Scalar-matrix condition as linear constraints on symbol coefficients:
    // per monomial, each off-diagonal entry vanishes and each diagonal entry
    // equals the (0,0) one.  Constraint rows are indexed by
    // (monomial, matrix position != (0,0)).
    const std::size_t n = static_cast<std::size_t>(ring.n);
    const Index per_mono = static_cast<Index>(n * n - 1);
    std::map<Monomial, Index> mono_base;
    for (auto& key : g.coords.keys())
      mono_base.emplace(key.second, 0);
    {
      Index next = 0;
      for (auto& [mon, base] : mono_base) { base = next; next += per_mono; }
    }
    std::map<std::pair<Index, Index>, Rational> entries;  // (constraint row, symbol) -> coef
    for (std::size_t s = 0; s < g.sym_vectors.size(); ++s) {
      for (auto& [slot, val] : g.sym_vectors[s]) {
        auto& key = g.coords.keys()[static_cast<std::size_t>(slot)];
        const std::size_t pos = key.first;
        const std::size_t i = pos / n, j = pos % n;
        const Index base = mono_base[key.second];
        auto add = [&](Index crow, const Rational& v) {
          auto [it, fresh] = entries.emplace(std::make_pair(crow, static_cast<Index>(s)), v);
          if (!fresh) it->second += v;
        };
        if (i != j) {
          add(base + static_cast<Index>(i * n + j) - 1, val);
        } else if (i == 0) {
          for (std::size_t k = 1; k < n; ++k)
            add(base + static_cast<Index>(k * n + k) - 1, -val);
        } else {
          add(base + static_cast<Index>(i * n + i) - 1, val);
        }
      }
    }
    SparseMatrix c(static_cast<Index>(mono_base.size()) * per_mono,
                   static_cast<Index>(g.symbols.size()));
    for (auto& [rc, v] : entries)
      if (v != 0) c.row[static_cast<std::size_t>(rc.first)].push_back({rc.second, v});

    span_rows.clear();
    for (auto& combo : kernel(c, opts)) {
      SparseVector acc;
      for (auto& [s, coef] : combo)
        acc = sv_axpy(Rational(1), acc, coef, g.sym_vectors[static_cast<std::size_t>(s)]);
      if (!acc.empty()) span_rows.push_back(std::move(acc));
    }
    g.pivot_symbols.clear();  // a symbol subset is not meaningful for the central case
  }

  SparseMatrix rows(static_cast<Index>(span_rows.size()), g.coords.size());
  rows.row = span_rows;
  g.basis = rref(rows).rows;
  return g;
}

}  // namespace genmat
