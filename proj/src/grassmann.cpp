#include "genmat/grassmann.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genmat {

std::int64_t gr_dim(std::int64_t m, std::int64_t N) {
  if (m < 0 || N < 0 || m > N) throw std::invalid_argument("gr_dim: need 0 <= m <= N");
  return (N - m) * m;
}

std::int64_t component_codim(const std::vector<std::int64_t>& ms, const std::vector<std::int64_t>& Ns) {
  if (ms.size() != Ns.size() || ms.empty())
    throw std::invalid_argument("component_codim: mismatched block lists");
  std::int64_t m = 0, N = 0, inner = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    inner += gr_dim(ms[i], Ns[i]);  // validates 0 <= m_i <= N_i
    m += ms[i];
    N += Ns[i];
  }
  return gr_dim(m, N) - inner;
}

PropGrassReport prop_grass_check(const std::vector<std::int64_t>& Ns, std::int64_t m) {
  PropGrassReport rep;
  rep.Ns = Ns;
  rep.m = m;
  for (std::int64_t x : Ns) {
    if (x < 1) throw std::invalid_argument("prop_grass_check: blocks must be >= 1");
    rep.N += x;
  }
  if (m < 2 || m > rep.N - 2)
    throw std::invalid_argument("prop_grass_check: need 2 <= m <= N-2");
  rep.bound = rep.N - *std::max_element(Ns.begin(), Ns.end());
  rep.bound_ok = true;
  rep.classification_ok = true;

  const std::size_t r = Ns.size();
  std::vector<std::int64_t> ms(r, 0);
  bool first = true;
  auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
    if (i + 1 == r) {
      if (rest > Ns[i]) return;
      ms[i] = rest;
      std::int64_t codim = component_codim(ms, Ns);
      ++rep.compositions;
      if (first || codim < rep.min_codim) rep.min_codim = codim;
      first = false;
      if (codim < rep.bound) rep.bound_ok = false;
      if (codim == rep.bound) {
        rep.equality.push_back(ms);
        bool family = (r == 1) || (r == 2 && m == 2 && rep.N == 4);
        if (!family) rep.classification_ok = false;
      }
      return;
    }
    for (std::int64_t v = 0; v <= std::min(Ns[i], rest); ++v) {
      ms[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, m);
  return rep;
}

PropGrassSweep prop_grass_sweep(std::int64_t max_total) {
  PropGrassSweep sweep;
  sweep.max_total = max_total;
  sweep.all_ok = true;
  sweep.monotone_ok = true;

  // (N, m) -> max block -> smallest min_codim seen with that max block.
  std::map<std::pair<std::int64_t, std::int64_t>, std::map<std::int64_t, std::int64_t>> by_max;

  std::vector<std::int64_t> blocks;
  auto enumerate = [&](auto&& self, std::int64_t rest, std::int64_t cap) -> void {
    if (!blocks.empty()) {
      std::int64_t N = 0;
      for (std::int64_t b : blocks) N += b;
      for (std::int64_t m = 2; m <= N - 2; ++m) {
        PropGrassReport rep = prop_grass_check(blocks, m);
        ++sweep.cases;
        if (!rep.ok()) {
          sweep.all_ok = false;
          if (sweep.first_failure.empty()) {
            std::ostringstream os;
            os << "Ns=(";
            for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
            os << ") m=" << m << (rep.bound_ok ? " classification" : " bound");
            sweep.first_failure = os.str();
          }
        }
        std::int64_t mx = blocks.front();  // non-increasing enumeration
        auto& slot = by_max[{N, m}];
        auto it = slot.find(mx);
        if (it == slot.end() || rep.min_codim < it->second) slot[mx] = rep.min_codim;
      }
    }
    for (std::int64_t b = std::min(rest, cap); b >= 1; --b) {
      blocks.push_back(b);
      self(self, rest - b, b);
      blocks.pop_back();
    }
  };
  enumerate(enumerate, max_total, max_total);

  for (auto& [key, slot] : by_max) {
    std::int64_t prev = -1;
    bool started = false;
    for (auto& [mx, mincodim] : slot) {  // ascending max block
      if (started && mincodim > prev) {
        sweep.monotone_ok = false;
        if (sweep.first_failure.empty()) {
          std::ostringstream os;
          os << "monotonicity N=" << key.first << " m=" << key.second << " at max block " << mx;
          sweep.first_failure = os.str();
        }
      }
      prev = mincodim;
      started = true;
    }
  }
  return sweep;
}

LemmaElemReport lemma_elem_check(int max_r, std::int64_t max_val) {
  if (max_r < 1 || max_val < 1)
    throw std::invalid_argument("lemma_elem_check: bounds must be >= 1");
  LemmaElemReport rep;
  rep.max_r = max_r;
  rep.max_val = max_val;
  rep.classification_ok = true;

  // Pairs (l_i, m_i) with l_i + m_i >= 1, encoded for non-decreasing
  // multiset enumeration (order does not matter for either side).
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 0; a <= max_val; ++a)
    for (std::int64_t b = 0; b <= max_val; ++b)
      if (a + b >= 1) pairs.push_back({a, b});

  std::vector<std::size_t> pick;
  auto evaluate = [&]() {
    std::int64_t l = 0, m = 0, inner = 0, best = 0;
    for (std::size_t idx : pick) {
      auto& [a, b] = pairs[idx];
      l += a;
      m += b;
      inner += a * b;
      best = std::max(best, a + b);
    }
    if (l < 2 || m < 2) return;
    ++rep.cases;
    std::int64_t lhs = (l - 1) * (m - 1) - 1;
    std::int64_t rhs = inner - best;
    auto describe = [&]() {
      std::ostringstream os;
      for (std::size_t idx : pick)
        os << "(" << pairs[idx].first << "," << pairs[idx].second << ")";
      return os.str();
    };
    if (lhs < rhs) {
      ++rep.violations;
      if (rep.first_failure.empty()) rep.first_failure = "inequality at " + describe();
      return;
    }
    if (lhs == rhs) {
      if (pick.size() == 1) {
        ++rep.equality_r1;
      } else if (pick.size() == 2 && pairs[pick[0]] == std::make_pair<std::int64_t, std::int64_t>(1, 1) &&
                 pairs[pick[1]] == std::make_pair<std::int64_t, std::int64_t>(1, 1)) {
        ++rep.equality_r2_units;
      } else {
        rep.classification_ok = false;
        if (rep.first_failure.empty()) rep.first_failure = "stray equality at " + describe();
      }
    }
  };
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    evaluate();
    if (left == 0) return;
    for (std::size_t idx = from; idx < pairs.size(); ++idx) {
      pick.push_back(idx);
      self(self, idx, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, max_r);
  return rep;
}

/******** character spaces ********/

void EigenvalueProfile::validate() const {
  if (q < 1) throw std::invalid_argument("EigenvalueProfile: q >= 1 required");
  if (l.empty() || l.size() != a.size())
    throw std::invalid_argument("EigenvalueProfile: multiplicities and exponents mismatch");
  std::set<std::int64_t> residues;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1) throw std::invalid_argument("EigenvalueProfile: multiplicities must be >= 1");
    std::int64_t r = ((a[i] % q) + q) % q;
    if (!residues.insert(r).second)
      throw std::invalid_argument("EigenvalueProfile: exponents must be distinct mod q");
  }
}

std::int64_t EigenvalueProfile::n() const {
  std::int64_t s = 0;
  for (std::int64_t x : l) s += x;
  return s;
}

std::map<std::int64_t, std::int64_t> character_space_dims(const EigenvalueProfile& p) {
  p.validate();
  std::map<std::int64_t, std::int64_t> dims;
  for (std::size_t i = 0; i < p.l.size(); ++i)
    for (std::size_t j = 0; j < p.l.size(); ++j) {
      std::int64_t mu = (((p.a[i] - p.a[j]) % p.q) + p.q) % p.q;
      dims[mu] += p.l[i] * p.l[j];
    }
  return dims;
}

Lemma5Report lemma5_check(int n_max, std::int64_t q_max) {
  if (n_max < 2 || n_max > 6) throw std::invalid_argument("lemma5_check: n_max in 2..6");
  if (q_max < 2) throw std::invalid_argument("lemma5_check: q_max >= 2");
  Lemma5Report rep;
  rep.n_max = n_max;
  rep.q_max = q_max;
  rep.n2_exception_all_equality = true;

  auto note = [&](const std::string& msg) {
    if (rep.first_failure.empty()) rep.first_failure = msg;
  };

  for (int n = 2; n <= n_max; ++n) {
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    for (std::int64_t q = 2; q <= q_max; ++q) {
      std::int64_t smax = std::min<std::int64_t>(n, q);
      for (std::int64_t s = 2; s <= smax; ++s) {
        // ordered compositions of n into s positive parts, paired with
        // increasing exponent subsets of {0..q-1}
        std::vector<std::int64_t> l(static_cast<std::size_t>(s));
        std::vector<std::int64_t> a(static_cast<std::size_t>(s));
        auto comp = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
          if (i + 1 == l.size()) {
            if (rest < 1) return;
            l[i] = rest;
            auto subs = [&](auto&& sub, std::size_t j, std::int64_t from) -> void {
              if (j == a.size()) {
                EigenvalueProfile prof{l, a, q};
                ++rep.profiles;
                auto dims = character_space_dims(prof);
                std::int64_t total = 0, v1 = dims.count(0) ? dims.at(0) : 0;
                for (auto& [mu, dim] : dims) total += dim;
                if (total != nn) {
                  ++rep.sum_violations;
                  note("character dims do not sum to n^2");
                }
                for (auto& [mu, dim] : dims)
                  if (dim > v1) {
                    ++rep.a_violations;
                    note("(a) fails: some V_mu beats V_1");
                  }

                // best fixed-locus dimension for every m in one DP sweep
                const std::int64_t m_hi = nn - 2;
                std::vector<std::int64_t> dp(static_cast<std::size_t>(m_hi) + 1, -1);
                dp[0] = 0;
                for (auto& [mu, dim] : dims)
                  for (std::int64_t t = m_hi; t >= 1; --t)
                    for (std::int64_t u = 1; u <= std::min(dim, t); ++u) {
                      if (dp[static_cast<std::size_t>(t - u)] < 0) continue;
                      dp[static_cast<std::size_t>(t)] =
                          std::max(dp[static_cast<std::size_t>(t)],
                                   dp[static_cast<std::size_t>(t - u)] + gr_dim(u, dim));
                    }

                for (std::int64_t m = 2; m <= m_hi; ++m) {
                  std::int64_t lhs = gr_dim(m, nn) - dp[static_cast<std::size_t>(m)];
                  std::int64_t rhs = nn - v1;
                  bool strict_required = (n >= 3) || dims.size() >= 3;
                  if (strict_required) {
                    if (!(lhs > rhs)) {
                      ++rep.b_violations;
                      std::ostringstream os;
                      os << "(b) fails at n=" << n << " q=" << q << " m=" << m;
                      note(os.str());
                    }
                  } else {
                    ++rep.n2_two_space_cases;
                    if (lhs != rhs) rep.n2_exception_all_equality = false;
                    if (lhs < rhs) {
                      ++rep.b_violations;
                      note("(b) exception region dips below the bound");
                    }
                  }
                }
                return;
              }
              for (std::int64_t v = from; v < q; ++v) {
                a[j] = v;
                sub(sub, j + 1, v + 1);
              }
            };
            subs(subs, 0, 0);
            return;
          }
          for (std::int64_t v = 1; v <= rest - (static_cast<std::int64_t>(l.size() - i) - 1); ++v) {
            l[i] = v;
            self(self, i + 1, rest - v);
          }
        };
        comp(comp, 0, n);
      }
    }
  }
  return rep;
}

}  // namespace genmat
