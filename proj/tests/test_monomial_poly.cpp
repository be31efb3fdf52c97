#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genmat/poly.hpp"

using namespace genmat;

namespace {
Poly X(int h, int i, int j) { return Poly::var({h, i, j}); }
}

TEST_CASE("variable order is flat (h,i,j)") {
  VarIndex a{1, 2, 2}, b{2, 1, 1};
  CHECK(a < b);  // layer dominates
  VarIndex c{1, 1, 2}, d{1, 2, 1};
  CHECK(c < d);  // then row
  CHECK(var_str(a) == "x(1;2,2)");
}

TEST_CASE("monomials multiply into canonical form") {
  Monomial m = Monomial::var({1, 1, 1}) * Monomial::var({1, 1, 1}) * Monomial::var({2, 1, 2});
  CHECK(m.degree() == 3);
  CHECK(m.exponent({1, 1, 1}) == 2);
  CHECK(m.exponent({2, 1, 2}) == 1);
  CHECK(m.exponent({3, 1, 1}) == 0);
  CHECK(m.str() == "x(1;1,1)^2*x(2;1,2)");
  auto d = m.multidegree(2);
  CHECK(d == std::vector<std::int64_t>{2, 1});
  CHECK(m.divide_var({1, 1, 1}).degree() == 2);
  CHECK_THROWS_AS(m.divide_var({3, 3, 3}), std::invalid_argument);
}

TEST_CASE("graded lex order: degree first, earlier variable wins ties") {
  Monomial one;
  Monomial x = Monomial::var({1, 1, 1});
  Monomial y = Monomial::var({2, 1, 1});
  CHECK(one < x);        // lower degree
  CHECK(y < x);          // same degree, x has the earlier variable
  CHECK(x * x < x * x * y);
  Monomial x2 = Monomial::var({1, 1, 1}, 2);
  Monomial xy = Monomial::var({1, 1, 1}) * y;
  CHECK(xy < x2);        // same degree, x^2 beats x*y on the earlier variable
}

TEST_CASE("poly arithmetic and commutator") {
  Poly p = X(1, 1, 1) + X(2, 1, 1);
  Poly q = p * p - p.scaled(2);
  CHECK(q.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(q.term_count() == 5);
  // entry polynomials commute, so pq - qp = 0
  CHECK((p * q - q * p).is_zero());
  CHECK(Poly(Rational(0)).is_zero());
  CHECK(Poly(Rational(3)).constant_term() == 3);
}

TEST_CASE("multihomogeneity detection") {
  Poly p = X(1, 1, 1) * X(2, 1, 2) + X(1, 2, 1) * X(2, 2, 2);
  std::vector<std::int64_t> d;
  CHECK(p.is_multihomogeneous(2, &d));
  CHECK(d == std::vector<std::int64_t>{1, 1});
  Poly q = p + X(1, 1, 1);
  CHECK(!q.is_multihomogeneous(2));
}

TEST_CASE("evaluation at a point") {
  Poly p = X(1, 1, 1) * X(1, 1, 1) + X(2, 1, 1).scaled(-3);
  auto point = [](const VarIndex& v) { return v.h == 1 ? Rational(5) : Rational(2); };
  CHECK(p.eval(point) == Rational(19));
}

TEST_CASE("layer substitution matches the action convention") {
  // x(2;a,b) |-> x(1;a,b) + x(2;a,b), x(1;a,b) |-> x(1;a,b):
  // coef[i][j] multiplies layer-j variables onto layer i.
  std::vector<std::vector<Rational>> coef = {{1, 1}, {0, 1}};
  Poly p = X(2, 1, 2);
  Poly image = p.substitute_layers(coef);
  CHECK(image == X(1, 1, 2) + X(2, 1, 2));
  Poly fixed = X(1, 1, 2).substitute_layers(coef);
  CHECK(fixed == X(1, 1, 2));
}

TEST_CASE("derivations satisfy Leibniz") {
  // derivation sending x(2;a,b) -> x(1;a,b), extended to products
  auto on_var = [](const VarIndex& v) {
    return v.h == 2 ? Poly::var({1, v.i, v.j}) : Poly();
  };
  Poly p = X(2, 1, 1) * X(2, 1, 1);
  CHECK(p.derive(on_var) == (X(1, 1, 1) * X(2, 1, 1)).scaled(2));
  Poly c = X(1, 1, 1);
  CHECK(c.derive(on_var).is_zero());
}

TEST_CASE("partial derivatives") {
  Poly p = X(1, 1, 1) * X(1, 1, 1) * X(2, 1, 1);
  CHECK(p.partial({1, 1, 1}) == (X(1, 1, 1) * X(2, 1, 1)).scaled(2));
  CHECK(p.partial({2, 1, 1}) == X(1, 1, 1) * X(1, 1, 1));
  CHECK(p.partial({2, 2, 2}).is_zero());
}

TEST_CASE("string form walks leading terms first") {
  Poly p = X(1, 1, 1) * X(1, 1, 1) - X(2, 1, 1).scaled(Rational(1, 2));
  CHECK(p.str() == "x(1;1,1)^2 - 1/2*x(2;1,1)");
}
