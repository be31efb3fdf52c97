#include "genmat/multiplicities.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace genmat {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition strip_zeros(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Partition> partitions_of(std::int64_t d, int max_parts) {
  if (d < 0 || max_parts < 0) throw std::invalid_argument("partitions_of: negative input");
  std::vector<Partition> out;
  Partition cur;
  // Descending-first recursion emits lex-descending order directly.
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t cap, int parts_left) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (parts_left == 0) return;
    for (std::int64_t v = std::min(rest, cap); v >= 1; --v) {
      // Feasibility: the remaining parts can still absorb rest - v.
      if (v * parts_left < rest) break;
      cur.push_back(v);
      self(self, rest - v, v, parts_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, d, d, max_parts);
  return out;
}

/******** Kostka numbers ********/

namespace {

// lambda/nu is a horizontal strip: nu_i <= lambda_i and lambda_{i+1} <= nu_i.
void horizontal_substrips(const Partition& lambda, std::int64_t size,
                          const std::function<void(const Partition&)>& emit) {
  Partition nu(lambda.size(), 0);
  auto rec = [&](auto&& self, std::size_t row, std::int64_t rest) -> void {
    if (row == lambda.size()) {
      if (rest == 0) emit(strip_zeros(nu));
      return;
    }
    std::int64_t lo = row + 1 < lambda.size() ? lambda[row + 1] : 0;
    for (std::int64_t v = lambda[row]; v >= lo; --v) {
      std::int64_t removed = lambda[row] - v;
      if (removed > rest) continue;
      nu[row] = v;
      self(self, row + 1, rest - removed);
    }
    nu[row] = 0;
  };
  rec(rec, 0, size);
}

long long kostka_rec(const Partition& lambda, const MultiDegree& mu, std::size_t k,
                     std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (k == 0) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  horizontal_substrips(lambda, mu[k - 1], [&](const Partition& nu) {
    total += kostka_rec(nu, mu, k - 1, memo);
  });
  memo[key] = total;
  return total;
}

}  // namespace

long long kostka_number(const Partition& lambda, const MultiDegree& mu) {
  if (!is_partition(lambda)) throw std::invalid_argument("kostka_number: not a partition");
  std::int64_t total = 0;
  for (auto x : mu) {
    if (x < 0) throw std::invalid_argument("kostka_number: negative content");
    total += x;
  }
  Partition l = strip_zeros(lambda);
  if (total != total_degree(l)) return 0;
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  return kostka_rec(l, mu, mu.size(), memo);
}

/******** weight-space dimensions and the Kostka solve ********/

Index weight_space_dim(const RingId& ring, const MultiDegree& mu, const Budget& budget,
                       const LinAlgOptions& opts) {
  return graded_component_basis(ring, mu, budget, opts).dimension();
}

long long MultiplicityTable::value(const Partition& lambda) const {
  Partition key = strip_zeros(lambda);
  for (auto& [l, v] : mult)
    if (l == key) return v;
  return 0;
}

MultiplicityTable multiplicity_table(const RingId& ring, std::int64_t degree,
                                     const MultCaps& caps, const Budget& budget,
                                     const LinAlgOptions& opts) {
  ring.validate();
  if (degree < 0) throw std::invalid_argument("multiplicity_table: negative degree");
  if (degree > caps.max_degree || ring.m > caps.max_m) {
    std::ostringstream os;
    os << "multiplicity_table: degree " << degree << " / m " << ring.m
       << " beyond caps (max_degree " << caps.max_degree << ", max_m " << caps.max_m << ")";
    throw BudgetExceeded(os.str());
  }

  MultiplicityTable table;
  table.ring = ring;
  table.degree = degree;

  std::vector<Partition> lambdas = partitions_of(degree, ring.m);
  // Unitriangular solve: K_{nu,lambda} != 0 forces nu to dominate lambda,
  // and dominance refines lex order, so earlier entries are already known.
  for (auto& lambda : lambdas) {
    MultiDegree w(lambda.begin(), lambda.end());
    w.resize(ring.m, 0);
    long long dim = static_cast<long long>(weight_space_dim(ring, w, budget, opts));
    long long rest = 0;
    for (auto& [nu, mult_nu] : table.mult) {
      if (mult_nu == 0) continue;
      rest += kostka_number(nu, w) * mult_nu;
    }
    table.mult.emplace_back(lambda, dim - rest);
    if (dim - rest < 0)
      throw CertificationError("multiplicity_table: negative multiplicity at " + ring.str());
  }
  return table;
}

long long mult_lambda(const RingId& ring, const Partition& lambda, const MultCaps& caps,
                      const Budget& budget, const LinAlgOptions& opts) {
  if (!is_partition(lambda)) throw std::invalid_argument("mult_lambda: not a partition");
  Partition key = strip_zeros(lambda);
  if (static_cast<int>(key.size()) > ring.m) return 0;
  return multiplicity_table(ring, total_degree(key), caps, budget, opts).value(key);
}

bool kostka_oracle_check(const RingId& ring, std::int64_t degree, const MultCaps& caps,
                         const Budget& budget, const LinAlgOptions& opts) {
  MultiplicityTable table = multiplicity_table(ring, degree, caps, budget, opts);
  for (auto& [lambda, mult] : table.mult) {
    // Independent path: the highest-weight space at lambda has dimension
    // equal to the Schur multiplicity.
    MultiDegree w(lambda.begin(), lambda.end());
    w.resize(ring.m, 0);
    InvariantBasis hw = highest_weight_space(ring, w, budget, opts);
    if (static_cast<long long>(hw.dimension()) != mult) return false;

    // Weyl symmetry: all permutations of the weight give one dimension.
    Index dim0 = weight_space_dim(ring, w, budget, opts);
    MultiDegree perm = w;
    std::sort(perm.begin(), perm.end());
    do {
      if (weight_space_dim(ring, perm, budget, opts) != dim0) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

Remark92Report remark92_check(const RingId& ring, std::int64_t r, const MultCaps& caps,
                              const Budget& budget, const LinAlgOptions& opts) {
  if (r < 1) throw std::invalid_argument("remark92_check: r >= 1 required");
  Remark92Report rep;
  rep.ring = ring;
  rep.r = r;
  rep.hw_dim = sl_invariants(ring, r, budget, opts).dimension();
  Partition rect(static_cast<std::size_t>(ring.m), r);
  rep.rect_mult = multiplicity_table(ring, r * ring.m, caps, budget, opts).value(rect);
  rep.equal = static_cast<long long>(rep.hw_dim) == rep.rect_mult;
  return rep;
}

NonMultipleReport nonmultiple_zero_check(const RingId& ring, std::int64_t dmax,
                                         const Budget& budget, const LinAlgOptions& opts) {
  ring.validate();
  NonMultipleReport rep;
  rep.ring = ring;
  rep.dmax = dmax;
  rep.ok = true;

  const int m = ring.m;
  const std::size_t n = static_cast<std::size_t>(ring.n);
  for (std::int64_t d = 1; d <= dmax && rep.ok; ++d) {
    if (d % m == 0) continue;
    // All weights of total degree d; none is constant, so each nonzero cell
    // must be scaled by some determinant-one diagonal element.
    MultiDegree w(static_cast<std::size_t>(m), 0);
    auto cells = [&](auto&& self, int h, std::int64_t rest) -> void {
      if (!rep.ok) return;
      if (h == m - 1) {
        w[static_cast<std::size_t>(h)] = rest;
        int i = 0;
        while (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i + 1)]) ++i;
        GradedBasis cell = graded_component_basis(ring, w, budget, opts);
        if (cell.dimension() == 0) return;

        RationalMatrix g = RationalMatrix::identity(static_cast<std::size_t>(m));
        g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 2;
        g.at(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i + 1)) = Rational(1, 2);
        std::int64_t gap = w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i + 1)];
        Integer two_pow = Integer(1) << static_cast<unsigned>(gap >= 0 ? gap : -gap);
        Rational factor = gap >= 0 ? Rational(two_pow) : Rational(Integer(1), two_pow);
        GroupElement ge{std::move(g)};
        for (Index k = 0; k < cell.dimension(); ++k) {
          PolyMatrix e = matrix_from_coordinates(cell.coords, cell.basis[static_cast<std::size_t>(k)], n);
          if (act_gl(ge, e) != e.scaled(factor)) {
            rep.ok = false;
            std::ostringstream os;
            os << "cell " << ring.str() << " weight (";
            for (std::size_t t = 0; t < w.size(); ++t) os << (t ? "," : "") << w[t];
            os << ") basis row " << k << " not scaled by " << rat_str(factor);
            rep.detail = os.str();
            return;
          }
        }
        ++rep.cells_checked;
        return;
      }
      for (std::int64_t v = 0; v <= rest; ++v) {
        w[static_cast<std::size_t>(h)] = v;
        self(self, h + 1, rest - v);
      }
    };
    cells(cells, 0, d);
  }
  return rep;
}

SeriesReport invariant_dim_series(const RingId& ring, int rmax, const MultCaps& caps,
                                  const Budget& budget, const LinAlgOptions& opts) {
  if (rmax < 1) throw std::invalid_argument("invariant_dim_series: rmax >= 1 required");
  SeriesReport rep;
  rep.ring = ring;
  rep.rmax = rmax;
  rep.exponent = reference_exponent(ring.m, ring.n);
  rep.consistent = true;
  for (int r = 1; r <= rmax; ++r) {
    Remark92Report step = remark92_check(ring, r, caps, budget, opts);
    rep.hw_dims.push_back(step.hw_dim);
    rep.mult_dims.push_back(step.rect_mult);
    if (!step.equal) rep.consistent = false;
  }
  return rep;
}

std::int64_t reference_exponent(int m, int n) {
  return static_cast<std::int64_t>(m - 1) * n * n - static_cast<std::int64_t>(m) * m + 1;
}

}  // namespace genmat
