#include "genmat/matrix.hpp"

namespace genmat {

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Rational(1));
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: not square");
  if (n > 16) throw std::invalid_argument("poly_det: dimension too large");
  // D[mask] = det of the top popcount(mask) rows on the columns in mask,
  // built by cofactor expansion along the last of those rows.
  const std::size_t full = (std::size_t{1} << n);
  std::vector<Poly> d(full);
  d[0] = Poly(Rational(1));
  for (std::size_t mask = 1; mask < full; ++mask) {
    const int k = __builtin_popcountll(mask);
    const auto& row = m[static_cast<std::size_t>(k - 1)];
    Poly acc;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      if (!row[c].is_zero()) {
        Poly term = d[mask ^ (std::size_t{1} << c)] * row[c];
        if (((k - 1) + pos) % 2 == 0) acc += term;
        else acc -= term;
      }
      ++pos;
    }
    d[mask] = std::move(acc);
  }
  return d[full - 1];
}

}  // namespace genmat
