#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genmat/words.hpp"

#include <algorithm>

using namespace genmat;

TEST_CASE("ring ids validate and print") {
  RingId g{RingKind::G, 2, 2};
  g.validate();
  CHECK(g.str() == "G(m=2,n=2)");
  CHECK(!g.with_traces());
  CHECK(!g.central());
  RingId zt{RingKind::ZT, 3, 2};
  CHECK(zt.with_traces());
  CHECK(zt.central());
  CHECK(ring_kind_parse("ZG") == RingKind::ZG);
  CHECK(ring_kind_str(RingKind::T) == "T");
  CHECK_THROWS_AS(ring_kind_parse("Q"), std::invalid_argument);
  RingId bad{RingKind::G, 1, 2};  // m = 1 only makes sense with traces
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  RingId bad2{RingKind::T, 2, 1};
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("word order is length then lex") {
  Word a{1, 2}, b{2, 1}, c{1, 1, 1};
  CHECK(word_less(a, b));
  CHECK(word_less(b, c));
  CHECK(!word_less(c, a));
  CHECK(word_str(Word{}) == "1");
  CHECK(word_str(Word{1, 2, 1}) == "X1*X2*X1");
}

TEST_CASE("min rotation canonicalizes necklaces") {
  CHECK(min_rotation(Word{2, 1}) == Word{1, 2});
  CHECK(min_rotation(Word{3, 1, 2}) == Word{1, 2, 3});
  CHECK(min_rotation(Word{2, 1, 2, 1}) == Word{1, 2, 1, 2});
  CHECK(min_rotation(Word{}) == Word{});
  CHECK(min_rotation(Word{1}) == Word{1});
}

TEST_CASE("words of a multidegree come in lex order without repeats") {
  auto ws = words_of_multidegree({2, 1});
  // all arrangements of {1,1,2}
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == Word{1, 1, 2});
  CHECK(ws[1] == Word{1, 2, 1});
  CHECK(ws[2] == Word{2, 1, 1});
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  // degree zero: just the empty word
  auto none = words_of_multidegree({0, 0});
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
}

TEST_CASE("trace monomial canonical form and order") {
  TraceMonomial t;
  t.factors = {Word{1, 2}};
  t.tail = Word{1};
  CHECK(t.multidegree(2) == MultiDegree{2, 1});
  CHECK(t.str() == "tr(X1*X2)*X1");
  TraceMonomial plain;
  plain.tail = {2, 1};
  CHECK(plain.str() == "X2*X1");
  TraceMonomial empty;
  CHECK(empty.str() == "1");
  // order: factor count first, so plain words precede traced symbols
  CHECK(trace_monomial_less(plain, t));
}

TEST_CASE("generic matrices and word evaluation") {
  PolyMatrix x1 = make_generic_matrix(1, 2);
  CHECK(x1.at(0, 1) == Poly::var({1, 1, 2}));
  PolyMatrix prod = eval_word({1, 1}, 2, 2);
  CHECK(prod == x1 * x1);
  // the empty word is the identity
  CHECK(eval_word({}, 2, 2) == PolyMatrix::identity(2));
  // trace monomial: tr(X1)*X2
  TraceMonomial t;
  t.factors = {Word{1}};
  t.tail = {2};
  PolyMatrix e = eval_trace_monomial(t, 2, 2);
  PolyMatrix x2 = make_generic_matrix(2, 2);
  CHECK(e == x2.scaled_poly(x1.trace()));
}

TEST_CASE("spanning symbols per ring") {
  RingId g{RingKind::G, 2, 2};
  auto sg = spanning_set(g, {1, 1});
  REQUIRE(sg.size() == 2);  // X1*X2 and X2*X1
  CHECK(sg[0].factors.empty());
  CHECK(sg[0].tail == Word{1, 2});
  CHECK(sg[1].tail == Word{2, 1});

  RingId t{RingKind::T, 2, 2};
  auto st = spanning_set(t, {1, 1});
  // tails of degree (1,1) plus factor splits:
  // X1X2, X2X1, tr(X1)X2, tr(X2)X1, tr(X1X2)*1, tr(X1)tr(X2)*1
  CHECK(st.size() == 6);
  for (auto& s : st) CHECK(s.multidegree(2) == MultiDegree{1, 1});
  // canonical order has no duplicates
  for (std::size_t k = 0; k + 1 < st.size(); ++k)
    CHECK(trace_monomial_less(st[k], st[k + 1]));

  // ZG spans with the same symbols as G (centrality is a filter downstream)
  RingId zg{RingKind::ZG, 2, 2};
  CHECK(spanning_set(zg, {1, 1}).size() == 2);
}

TEST_CASE("budget refusal is a distinct error") {
  Budget tiny;
  tiny.max_symbols = 2;
  RingId t{RingKind::T, 2, 2};
  CHECK_THROWS_AS(spanning_set(t, {1, 1}, tiny), BudgetExceeded);
}
