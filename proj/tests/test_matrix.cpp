#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genmat/matrix.hpp"
#include "genmat/rng.hpp"
#include "genmat/words.hpp"

using namespace genmat;

namespace {
RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}
}

TEST_CASE("rational matrix arithmetic") {
  auto a = from_rows({{1, 2}, {3, 4}});
  auto b = from_rows({{0, 1}, {1, 0}});
  CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
  CHECK((a + b - b) == a);
  CHECK(a.scaled(Rational(2)) == from_rows({{2, 4}, {6, 8}}));
  CHECK(a.trace() == 5);
  CHECK(RationalMatrix::identity(3).det() == 1);
  CHECK(a.det() == -2);
  CHECK(from_rows({{1, 2}, {2, 4}}).det() == 0);
}

TEST_CASE("inverse is exact") {
  auto a = from_rows({{2, 1}, {5, 3}});
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == RationalMatrix::identity(2));
  CHECK(!from_rows({{1, 1}, {1, 1}}).inverse().has_value());
  // random sweep: A * A^{-1} == I whenever invertible
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rational(rng.integer(6, false));
    auto mi = m.inverse();
    if (m.det() == 0) CHECK(!mi.has_value());
    else CHECK((m * *mi) == RationalMatrix::identity(3));
  }
}

TEST_CASE("char_poly matches det(tI - A) by direct evaluation") {
  Rng rng(17);
  for (int t = 0; t < 8; ++t) {
    RationalMatrix a(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = Rational(rng.integer(5, false));
    UniPoly cp = char_poly(a);
    CHECK(cp.degree() == 3);
    CHECK(cp.leading() == 1);
    // evaluate at a few scalars and compare against det(xI - A)
    for (long x : {0L, 1L, -2L, 7L}) {
      RationalMatrix xi = RationalMatrix::identity(3).scaled(Rational(x)) - a;
      CHECK(cp.eval(Rational(x)) == xi.det());
    }
    // Cayley-Hamilton numerically: sum c_k A^k = 0
    RationalMatrix acc(3), power = RationalMatrix::identity(3);
    for (int k = 0; k <= 3; ++k) {
      acc = acc + power.scaled(cp.coeff(static_cast<std::size_t>(k)));
      power = power * a;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("poly matrix basics") {
  auto x1 = make_generic_matrix(1, 2);
  auto x2 = make_generic_matrix(2, 2);
  CHECK((x1 * x2 - x2 * x1).trace().is_zero());  // tr is symmetric
  CHECK(PolyMatrix::identity(2).is_scalar());
  CHECK(PolyMatrix::scalar(2, x1.trace()).is_scalar());
  CHECK(!x1.is_scalar());
  CHECK(PolyMatrix::matrix_unit(2, 1, 2).at(0, 1).constant_term() == 1);
  CHECK((x1 - x1).is_zero());
}

TEST_CASE("poly matrix evaluation commutes with arithmetic") {
  auto x1 = make_generic_matrix(1, 2);
  auto x2 = make_generic_matrix(2, 2);
  PolyMatrix f = x1 * x2 - x2 * x1;
  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    RationalMatrix a1(2), a2(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a1.at(i, j) = Rational(rng.integer(7, false));
        a2.at(i, j) = Rational(rng.integer(7, false));
      }
    auto point = [&](const VarIndex& v) {
      const RationalMatrix& src = v.h == 1 ? a1 : a2;
      return src.at(static_cast<std::size_t>(v.i - 1), static_cast<std::size_t>(v.j - 1));
    };
    CHECK(f.eval(point) == a1 * a2 - a2 * a1);
  }
}

TEST_CASE("char_poly_coeffs on the generic matrix recovers trace and det") {
  auto x = make_generic_matrix(1, 2);
  auto c = char_poly_coeffs(x);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == -x.trace());
  // c2 = det for n = 2: x11 x22 - x12 x21
  Poly det = Poly::var({1, 1, 1}) * Poly::var({1, 2, 2}) - Poly::var({1, 1, 2}) * Poly::var({1, 2, 1});
  CHECK(c[1] == det);
  // Cayley-Hamilton symbolically
  PolyMatrix ch = x * x + x.scaled_poly(c[0]) + PolyMatrix::scalar(2, c[1]);
  CHECK(ch.is_zero());
}

TEST_CASE("poly_det expands exactly") {
  // 2x2 with polynomial entries
  auto x = make_generic_matrix(1, 2);
  std::vector<std::vector<Poly>> grid{{x.at(0, 0), x.at(0, 1)}, {x.at(1, 0), x.at(1, 1)}};
  Poly d = poly_det(grid);
  auto c = char_poly_coeffs(x);
  CHECK(d == c[1]);
  // numeric cross-check on a 4x4 with constant entries
  Rng rng(31);
  RationalMatrix a(4);
  std::vector<std::vector<Poly>> g4(4, std::vector<Poly>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      a.at(i, j) = Rational(rng.integer(4, false));
      g4[i][j] = Poly(a.at(i, j));
    }
  CHECK(poly_det(g4).constant_term() == a.det());
}
