#include "genmat/linalg.hpp"

#include "genmat/modular.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace genmat {

/******** sparse vector helpers ********/

SparseVector sv_axpy(const Rational& a, const SparseVector& x,
                     const Rational& b, const SparseVector& y) {
  SparseVector r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      Rational v = a * x[i].second;
      if (v != 0) r.push_back({x[i].first, v});
      ++i;
    } else if (y[j].first < x[i].first) {
      Rational v = b * y[j].second;
      if (v != 0) r.push_back({y[j].first, v});
      ++j;
    } else {
      Rational v = a * x[i].second + b * y[j].second;
      if (v != 0) r.push_back({x[i].first, v});
      ++i; ++j;
    }
  }
  for (; i < x.size(); ++i) {
    Rational v = a * x[i].second;
    if (v != 0) r.push_back({x[i].first, v});
  }
  for (; j < y.size(); ++j) {
    Rational v = b * y[j].second;
    if (v != 0) r.push_back({y[j].first, v});
  }
  return r;
}

Rational sv_dot_dense(const SparseVector& x, const std::vector<Rational>& dense) {
  Rational r(0);
  for (auto& [i, v] : x)
    if (static_cast<std::size_t>(i) < dense.size()) r += v * dense[static_cast<std::size_t>(i)];
  return r;
}

void sv_make_primitive(SparseVector& v) {
  if (v.empty()) return;
  Integer l(1);
  for (auto& [i, val] : v) l = lcm(l, den(val));
  Integer g(0);
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  for (auto& [i, val] : v) {
    Integer w = num(val) * (l / den(val));
    scaled.push_back(w);
    g = gcd(g, abs(w));
  }
  for (std::size_t k = 0; k < v.size(); ++k) v[k].second = Rational(scaled[k] / g);
}

/******** SparseMatrix ********/

SparseMatrix SparseMatrix::from_columns(Index nrows, const std::vector<SparseVector>& columns) {
  SparseMatrix a(nrows, static_cast<Index>(columns.size()));
  // Two passes keep each row sorted without per-insert searches.
  std::vector<std::size_t> counts(static_cast<std::size_t>(nrows), 0);
  for (auto& col : columns)
    for (auto& [i, val] : col) {
      if (i < 0 || i >= nrows) throw std::invalid_argument("from_columns: row index out of range");
      ++counts[static_cast<std::size_t>(i)];
    }
  for (Index i = 0; i < nrows; ++i) a.row[static_cast<std::size_t>(i)].reserve(counts[static_cast<std::size_t>(i)]);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (auto& [i, val] : columns[j])
      a.row[static_cast<std::size_t>(i)].push_back({static_cast<Index>(j), val});
  return a;
}

void SparseMatrix::set(Index i, Index j, const Rational& v) {
  if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::invalid_argument("SparseMatrix::set: out of range");
  auto& r = row[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, Index c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (v == 0) r.erase(it);
    else it->second = v;
  } else if (v != 0) {
    r.insert(it, {j, v});
  }
}

Index SparseMatrix::nnz() const {
  Index n = 0;
  for (auto& r : row) n += static_cast<Index>(r.size());
  return n;
}

/******** exact reduced row echelon ********/

namespace {

// pc*r - rc*p with content removed: the fraction-free elimination step.
SparseVector ff_eliminate(const SparseVector& r, const Rational& rc,
                          const SparseVector& p, const Rational& pc) {
  SparseVector out = sv_axpy(pc, r, -rc, p);
  sv_make_primitive(out);
  return out;
}

}  // namespace

RrefResult rref(const SparseMatrix& a) {
  std::map<Index, std::size_t> pivots;  // pivot column -> slot in store
  std::vector<SparseVector> store;
  for (auto& input : a.row) {
    SparseVector r = input;
    sv_make_primitive(r);
    while (!r.empty()) {
      Index lead = r.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, store.size());
        store.push_back(std::move(r));
        break;
      }
      const SparseVector& p = store[it->second];
      r = ff_eliminate(r, r.front().second, p, p.front().second);
    }
  }
  // Back-substitution, highest pivot column first.
  for (auto hi = pivots.rbegin(); hi != pivots.rend(); ++hi) {
    const Index c = hi->first;
    for (auto lo = pivots.begin(); lo->first != c; ++lo) {
      SparseVector& r = store[lo->second];
      auto hit = std::lower_bound(r.begin(), r.end(), c,
                                  [](const auto& e, Index col) { return e.first < col; });
      if (hit == r.end() || hit->first != c) continue;
      const SparseVector& p = store[hi->second];
      r = ff_eliminate(r, hit->second, p, p.front().second);
    }
  }
  RrefResult out;
  out.rows.reserve(pivots.size());
  out.pivot_cols.reserve(pivots.size());
  for (auto& [c, slot] : pivots) {
    SparseVector r = std::move(store[slot]);
    Rational lead = r.front().second;
    for (auto& [idx, val] : r) val /= lead;
    out.pivot_cols.push_back(c);
    out.rows.push_back(std::move(r));
  }
  return out;
}

/******** modular pre-pass ********/

namespace {

struct ModEchelon {
  bool usable = false;              // false: some denominator vanished mod p
  std::vector<Index> pivot_cols;    // ascending
  std::vector<Index> pivot_rows;    // original row that created each pivot
};

// Plain forward row echelon mod p; pivot columns come out greedy
// left-to-right, matching the exact path's pivot choice.
ModEchelon modp_row_echelon(const SparseMatrix& a, const PrimeField& f) {
  ModEchelon out;
  std::map<Index, std::vector<std::pair<Index, std::uint64_t>>> ech;  // pivot col -> normalized row
  std::map<Index, Index> origin;                                      // pivot col -> original row
  for (Index i = 0; i < a.rows; ++i) {
    std::map<Index, std::uint64_t> buf;
    for (auto& [j, val] : a.row[static_cast<std::size_t>(i)]) {
      auto img = f.image(val);
      if (!img) return out;  // prime collides with a denominator: caller retries
      if (*img != 0) buf[j] = *img;
    }
    while (!buf.empty()) {
      Index lead = buf.begin()->first;
      std::uint64_t lv = buf.begin()->second;
      auto it = ech.find(lead);
      if (it == ech.end()) {
        std::vector<std::pair<Index, std::uint64_t>> row;
        row.reserve(buf.size());
        std::uint64_t inv = f.inv(lv);
        for (auto& [j, v] : buf) row.push_back({j, f.mul(v, inv)});
        ech.emplace(lead, std::move(row));
        origin.emplace(lead, i);
        break;
      }
      for (auto& [j, v] : it->second) {
        std::uint64_t delta = f.mul(lv, v);
        auto b = buf.find(j);
        if (b == buf.end()) {
          if (delta != 0) buf.emplace(j, f.neg(delta));
        } else {
          b->second = f.sub(b->second, delta);
          if (b->second == 0) buf.erase(b);
        }
      }
    }
  }
  out.usable = true;
  for (auto& [c, row] : ech) {
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(origin[c]);
  }
  return out;
}

// Runs the echelon with retries over the deterministic prime stream until a
// prime avoids every denominator.  Gives up (usable=false) after 16 primes,
// in which case callers take the exact path.
ModEchelon modp_echelon_retry(const SparseMatrix& a, std::size_t prime_index) {
  for (std::size_t k = 0; k < 16; ++k) {
    PrimeField f(nth_prime31(prime_index + k));
    ModEchelon e = modp_row_echelon(a, f);
    if (e.usable) return e;
  }
  return {};
}

SparseMatrix submatrix(const SparseMatrix& a, const std::vector<Index>& rows,
                       const std::vector<Index>& cols) {
  std::map<Index, Index> colmap;
  for (std::size_t t = 0; t < cols.size(); ++t) colmap.emplace(cols[t], static_cast<Index>(t));
  SparseMatrix s(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& [j, val] : a.row[static_cast<std::size_t>(rows[r])]) {
      auto it = colmap.find(j);
      if (it != colmap.end()) s.row[r].push_back({it->second, val});
    }
  }
  return s;
}

bool modular_applicable(const SparseMatrix& a, const LinAlgOptions& o) {
  return o.use_modular && a.rows * a.cols > o.modular_threshold && a.rows > 0 && a.cols > 0;
}

std::vector<SparseVector> kernel_from_rref(const RrefResult& R, Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : R.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<SparseVector> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SparseVector v;
    for (std::size_t k = 0; k < R.rows.size(); ++k) {
      auto& row = R.rows[k];
      auto hit = std::lower_bound(row.begin(), row.end(), f,
                                  [](const auto& e, Index col) { return e.first < col; });
      if (hit != row.end() && hit->first == f)
        v.push_back({R.pivot_cols[k], -hit->second});
    }
    v.push_back({f, Rational(1)});
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

void certify_in_kernel(const SparseMatrix& a, const std::vector<SparseVector>& basis) {
  for (auto& v : basis) {
    std::vector<Rational> dense(static_cast<std::size_t>(a.cols), Rational(0));
    for (auto& [i, val] : v) dense[static_cast<std::size_t>(i)] = val;
    for (Index r = 0; r < a.rows; ++r) {
      if (sv_dot_dense(a.row[static_cast<std::size_t>(r)], dense) != 0)
        throw CertificationError("kernel certification failed (modular pre-pass produced a wrong pivot set)");
    }
  }
}

std::vector<SparseVector> kernel_modular(const SparseMatrix& a, const LinAlgOptions& opts) {
  ModEchelon e = modp_echelon_retry(a, opts.prime_index);
  if (!e.usable) return kernel_from_rref(rref(a), a.cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < a.cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  // Exact solve restricted to the pivot rows: [A(R,B) | A(R,F)] in one rref.
  std::vector<Index> cols_order = e.pivot_cols;
  cols_order.insert(cols_order.end(), free_cols.begin(), free_cols.end());
  SparseMatrix sys = submatrix(a, e.pivot_rows, cols_order);
  RrefResult R = rref(sys);
  const Index nb = static_cast<Index>(e.pivot_cols.size());
  if (static_cast<Index>(R.pivot_cols.size()) != nb)
    throw CertificationError("modular rank hint not confirmed by exact elimination");
  for (Index k = 0; k < nb; ++k)
    if (R.pivot_cols[static_cast<std::size_t>(k)] != k)
      throw CertificationError("modular pivot-column hint not confirmed by exact elimination");

  std::vector<SparseVector> basis;
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const Index fc = nb + static_cast<Index>(t);
    SparseVector v;
    for (std::size_t k = 0; k < R.rows.size(); ++k) {
      auto& row = R.rows[k];
      auto hit = std::lower_bound(row.begin(), row.end(), fc,
                                  [](const auto& x, Index col) { return x.first < col; });
      if (hit != row.end() && hit->first == fc)
        v.push_back({e.pivot_cols[k], -hit->second});
    }
    v.push_back({free_cols[t], Rational(1)});
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  certify_in_kernel(a, basis);
  return basis;
}

}  // namespace

Index rank(const SparseMatrix& a, const LinAlgOptions& opts) {
  if (modular_applicable(a, opts))
    return a.cols - static_cast<Index>(kernel_modular(a, opts).size());
  return static_cast<Index>(rref(a).pivot_cols.size());
}

std::vector<SparseVector> kernel(const SparseMatrix& a, const LinAlgOptions& opts) {
  if (a.cols == 0) return {};
  if (modular_applicable(a, opts)) return kernel_modular(a, opts);
  return kernel_from_rref(rref(a), a.cols);
}

/******** membership ********/

namespace {

// Exact check that coords reproduce v; used by both paths.
bool reproduces(const SparseVector& v, const std::vector<SparseVector>& span_columns,
                const std::vector<Rational>& coords, Index nrows) {
  std::vector<Rational> acc(static_cast<std::size_t>(nrows), Rational(0));
  for (std::size_t j = 0; j < span_columns.size(); ++j) {
    if (coords[j] == 0) continue;
    for (auto& [i, val] : span_columns[j]) acc[static_cast<std::size_t>(i)] += coords[j] * val;
  }
  for (auto& [i, val] : v) {
    if (acc[static_cast<std::size_t>(i)] != val) return false;
    acc[static_cast<std::size_t>(i)] = 0;
  }
  for (auto& x : acc)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<Rational>> membership_exact(const SparseVector& v,
                                                      const std::vector<SparseVector>& span_columns,
                                                      Index nrows) {
  std::vector<SparseVector> aug = span_columns;
  aug.push_back(v);
  SparseMatrix a = SparseMatrix::from_columns(nrows, aug);
  RrefResult R = rref(a);
  const Index vcol = static_cast<Index>(span_columns.size());
  std::vector<Rational> coords(span_columns.size(), Rational(0));
  for (std::size_t k = 0; k < R.pivot_cols.size(); ++k) {
    if (R.pivot_cols[k] == vcol) return std::nullopt;  // pivot in the target column
    auto& row = R.rows[k];
    auto hit = std::lower_bound(row.begin(), row.end(), vcol,
                                [](const auto& e, Index col) { return e.first < col; });
    if (hit != row.end() && hit->first == vcol)
      coords[static_cast<std::size_t>(R.pivot_cols[k])] = hit->second;
  }
  if (!reproduces(v, span_columns, coords, nrows))
    throw CertificationError("membership: exact elimination produced non-reproducing coordinates");
  return coords;
}

std::optional<std::vector<Rational>> membership_modular(const SparseVector& v,
                                                        const std::vector<SparseVector>& span_columns,
                                                        Index nrows,
                                                        const LinAlgOptions& opts) {
  std::vector<SparseVector> aug = span_columns;
  aug.push_back(v);
  SparseMatrix a = SparseMatrix::from_columns(nrows, aug);
  ModEchelon e = modp_echelon_retry(a, opts.prime_index);
  if (!e.usable) return membership_exact(v, span_columns, nrows);

  const Index vcol = static_cast<Index>(span_columns.size());
  std::vector<Index> b_cols, b_rows;
  Index incons_row = -1;
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    if (e.pivot_cols[k] == vcol) incons_row = e.pivot_rows[k];
    else { b_cols.push_back(e.pivot_cols[k]); b_rows.push_back(e.pivot_rows[k]); }
  }

  if (incons_row < 0) {
    // Candidate coordinates from the pivot-row subsystem, then certify.
    std::vector<Index> cols_order = b_cols;
    cols_order.push_back(vcol);
    SparseMatrix sys = submatrix(a, b_rows, cols_order);
    RrefResult R = rref(sys);
    const Index nb = static_cast<Index>(b_cols.size());
    if (static_cast<Index>(R.pivot_cols.size()) != nb)
      throw CertificationError("membership: modular rank hint not confirmed");
    std::vector<Rational> coords(span_columns.size(), Rational(0));
    for (Index k = 0; k < nb; ++k) {
      if (R.pivot_cols[static_cast<std::size_t>(k)] != k)
        throw CertificationError("membership: modular pivot hint not confirmed");
      auto& row = R.rows[static_cast<std::size_t>(k)];
      auto hit = std::lower_bound(row.begin(), row.end(), nb,
                                  [](const auto& x, Index col) { return x.first < col; });
      if (hit != row.end() && hit->first == nb)
        coords[static_cast<std::size_t>(b_cols[static_cast<std::size_t>(k)])] = hit->second;
    }
    if (!reproduces(v, span_columns, coords, nrows))
      throw CertificationError("membership: modular coordinates failed exact certification");
    return coords;
  }

  // Candidate non-membership: build the separating functional on the rows
  // R u {incons_row} and certify y^T A = 0, y^T v != 0 exactly.
  std::vector<Index> wit_rows = b_rows;
  wit_rows.push_back(incons_row);
  SparseMatrix sub = submatrix(a, wit_rows, b_cols);
  // Left kernel of sub = right kernel of its transpose.
  std::vector<SparseVector> cols_of_subT(wit_rows.size());
  for (std::size_t r = 0; r < sub.row.size(); ++r)
    for (auto& [j, val] : sub.row[r]) cols_of_subT[r].push_back({j, val});
  SparseMatrix subT = SparseMatrix::from_columns(static_cast<Index>(b_cols.size()), cols_of_subT);
  auto lk = kernel_from_rref(rref(subT), subT.cols);
  if (lk.size() != 1)
    throw CertificationError("membership: separating functional not one-dimensional");
  // y over original row indices
  SparseVector y;
  for (auto& [t, val] : lk[0]) y.push_back({wit_rows[static_cast<std::size_t>(t)], val});
  std::sort(y.begin(), y.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
  // y^T * (all columns of a): accumulate y_r * a.row[r].
  std::map<Index, Rational> combo;
  for (auto& [r, yr] : y)
    for (auto& [j, val] : a.row[static_cast<std::size_t>(r)]) {
      auto [it, inserted] = combo.emplace(j, yr * val);
      if (!inserted) it->second += yr * val;
    }
  for (auto& [j, val] : combo) {
    if (j == vcol) continue;
    if (val != 0)
      throw CertificationError("membership: separating functional failed exact certification");
  }
  auto vt = combo.find(vcol);
  if (vt == combo.end() || vt->second == 0)
    throw CertificationError("membership: separating functional does not separate");
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> membership(const SparseVector& v,
                                                const std::vector<SparseVector>& span_columns,
                                                Index nrows,
                                                const LinAlgOptions& opts) {
  if (span_columns.empty()) {
    if (v.empty()) return std::vector<Rational>{};
    return std::nullopt;
  }
  SparseMatrix probe = SparseMatrix::from_columns(nrows, span_columns);
  if (modular_applicable(probe, opts)) return membership_modular(v, span_columns, nrows, opts);
  return membership_exact(v, span_columns, nrows);
}

}  // namespace genmat
