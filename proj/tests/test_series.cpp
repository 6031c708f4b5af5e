#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "igup/series.hpp"

using namespace igup;
using igup::testing::graded_table;
using igup::testing::grading_holds;
using igup::testing::random_graded_series;
using igup::testing::random_numeric_series;

namespace {

SymbolTablePtr beta_table() {
  static SymbolTablePtr t = make_table({{"beta", 2}});
  return t;
}

SymbolTablePtr empty_table() {
  static SymbolTablePtr t = make_table({});
  return t;
}

MomentumSeries S(const std::string& text, SymbolTablePtr table, int order) {
  return parse_series(text, std::move(table), order);
}

}  // namespace

TEST_CASE("mul: schoolbook products") {
  auto t = beta_table();
  CHECK(mul(S("1 + beta*p^2", t, 4), S("1 - beta*p^2", t, 4)) == S("1 - beta^2*p^4", t, 4));
  CHECK(mul(S("1 + p", empty_table(), 2), S("1 + p", empty_table(), 2)) ==
        S("1 + 2*p + p^2", empty_table(), 2));
  auto ft = make_table({{"a1", 1}, {"alpha1", 1}});
  CHECK(mul(S("1 + a1*p", ft, 2), S("1 + alpha1*p", ft, 2)) ==
        S("1 + a1*p + alpha1*p + a1*alpha1*p^2", ft, 2));
}

TEST_CASE("mul: symbol-table mismatch rejected") {
  CHECK_THROWS_AS(mul(S("1 + p", empty_table(), 2), S("1 + beta*p^2", beta_table(), 2)), error);
}

TEST_CASE("pow: recurrence against known expansions") {
  auto e = empty_table();
  CHECK(pow_series(S("1 + p", e, 2), 2) == S("1 + 2*p + p^2", e, 2));
  CHECK(pow_series(S("1 + p", e, 3), 3) == S("1 + 3*p + 3*p^2 + p^3", e, 3));
  auto at = make_table({{"A1", 1}, {"A2", 2}});
  CHECK(pow_series(S("1 + A1*p + A2*p^2", at, 2), 2) ==
        S("1 + 2*A1*p + A1^2*p^2 + 2*A2*p^2", at, 2));
  CHECK(pow_series(S("1 + p", e, 3), 0) == MomentumSeries::one(e, 3));
}

TEST_CASE("pow: equals repeated mul on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int order = 2 + static_cast<int>(rng() % 7);  // <= 8
    int n = 1 + static_cast<int>(rng() % 6);
    MomentumSeries a = random_numeric_series(rng, empty_table(), order, true);
    MomentumSeries expect = MomentumSeries::one(empty_table(), order);
    for (int i = 0; i < n; ++i) expect = mul(expect, a);
    CHECK(pow_series(a, n) == expect);
  }
}

TEST_CASE("reciprocal") {
  auto t = beta_table();
  CHECK(reciprocal(S("1 + beta*p^2", t, 4)) == S("1 - beta*p^2 + beta^2*p^4", t, 4));
  CHECK(reciprocal(MomentumSeries::one(empty_table(), 3)) == MomentumSeries::one(empty_table(), 3));
  auto alt = make_table({{"alpha", 1}});
  CHECK(reciprocal(S("1 - 2*alpha*p", alt, 2)) == S("1 + 2*alpha*p + 4*alpha^2*p^2", alt, 2));
  CHECK_THROWS_AS(reciprocal(S("p", empty_table(), 2)), error);
}

TEST_CASE("reciprocal: a * 1/a = 1 on random series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MomentumSeries a = random_numeric_series(rng, empty_table(), 6, false);
    if (a.coeff(0).is_zero()) continue;
    CHECK(mul(a, reciprocal(a)) == MomentumSeries::one(empty_table(), 6));
  }
}

TEST_CASE("antiderivative") {
  auto t = beta_table();
  CHECK(antiderivative(S("1 - beta*p^2 + beta^2*p^4", t, 4)) ==
        S("p - 1/3*beta*p^3 + 1/5*beta^2*p^5", t, 5));
  CHECK(antiderivative(MomentumSeries::one(empty_table(), 0)) == S("p", empty_table(), 1));
  CHECK_THROWS_AS(antiderivative(S("p^-1", empty_table(), 1)), error);
}

TEST_CASE("revert: identity and Table-I A-series") {
  CHECK(revert(MomentumSeries::one(empty_table(), 4)) == MomentumSeries::one(empty_table(), 4));

  auto gt = make_table({{"alpha1", 1}, {"alpha2", 2}, {"alpha3", 3}});
  MomentumSeries h = S("1 + alpha1*p + alpha2*p^2 + alpha3*p^3", gt, 3);
  MomentumSeries A = revert(h);
  CHECK(A.coeff(1) == parse_poly("-alpha1", *gt));
  CHECK(A.coeff(2) == parse_poly("2*alpha1^2 - alpha2", *gt));
  CHECK(A.coeff(3) == parse_poly("-5*alpha1^3 + 5*alpha1*alpha2 - alpha3", *gt));
}

TEST_CASE("revert: tan multiplier gives arctan coefficients") {
  // h = tan(rho)/rho = 1 + rho^2/3 + 2 rho^4/15; its reversion is the
  // arctan multiplier 1 - p^2/3 + p^4/5 (classical series, beta = 1).
  auto e = empty_table();
  MomentumSeries h = S("1 + 1/3*p^2 + 2/15*p^4", e, 5);
  CHECK(revert(h) == S("1 - 1/3*p^2 + 1/5*p^4", e, 5));
}

TEST_CASE("compose: substitution examples") {
  auto e = empty_table();
  CHECK(compose(S("1 + p^2", e, 2), MomentumSeries::one(e, 2)) == S("1 + p^2", e, 2));

  auto at = make_table({{"alpha1", 1}});
  MomentumSeries h = S("1 + alpha1*p", at, 2);
  MomentumSeries A = revert(h);  // 1 - alpha1 p + 2 alpha1^2 p^2
  CHECK(compose(S("1 + alpha1*p", at, 2), A) ==
        S("1 + alpha1*p - alpha1^2*p^2", at, 2));
}

TEST_CASE("revert/compose: two-sided round trip on random multipliers") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int order = 2 + static_cast<int>(rng() % 7);
    MomentumSeries h = random_numeric_series(rng, empty_table(), order, true);
    MomentumSeries A = revert(h);
    // p = h(rho) rho, rho = A(p) p: h(rho(p)) A(p) = 1 ...
    CHECK(mul(compose(h, A), A) == MomentumSeries::one(empty_table(), order));
    // ... and reverting the inverse map restores h.
    CHECK(revert(A) == h);
  }
}

TEST_CASE("grading: operations preserve the weight invariant") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    MomentumSeries a = random_graded_series(rng, 6);
    MomentumSeries b = random_graded_series(rng, 6);
    CHECK(grading_holds(a));
    CHECK(grading_holds(mul(a, b)));
    CHECK(grading_holds(a + b));
    CHECK(grading_holds(a - b));
    CHECK(grading_holds(pow_series(a, 3)));
    CHECK(grading_holds(reciprocal(a)));
    CHECK(grading_holds(revert(a)));
    CHECK(grading_holds(compose(a, b)));
    // antiderivative shifts weight by construction; shifting back by one
    // power restores the graded form (the f = p/integral route).
    CHECK(grading_holds(shift(antiderivative(a), -1)));
  }
}

TEST_CASE("ring laws at fixed truncation") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    MomentumSeries a = random_numeric_series(rng, empty_table(), 5, false);
    MomentumSeries b = random_numeric_series(rng, empty_table(), 5, false);
    MomentumSeries c = random_numeric_series(rng, empty_table(), 5, false);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}

TEST_CASE("p^-1 slot: single pole only") {
  auto e = empty_table();
  MomentumSeries g = S("p^-1 + p", e, 2);
  CHECK(g.min_power() == -1);
  CHECK(g.coeff(-1) == PolyCoeff::constant(1));
  // A product creating p^-2 is rejected.
  CHECK_THROWS_AS(mul(g, g), error);
}

TEST_CASE("canonical text form round trips") {
  auto t = beta_table();
  MomentumSeries s = S("1 - 1/3*beta*p^2 + 2/15*beta^2*p^4", t, 4);
  CHECK(parse_series(to_string(s), t, 4) == s);
  CHECK(to_string(s) == "1 - 1/3*beta^1*p^2 + 2/15*beta^2*p^4");
  // Structured form mentions every power up to the truncation order.
  std::string js = to_json(s);
  CHECK(js.find("\"power\":4") != std::string::npos);
  CHECK(js.find("\"coeff\":\"2/15\"") != std::string::npos);
}

TEST_CASE("parse errors carry position and expectation") {
  CHECK_THROWS_WITH_AS(parse_series("1 + + p", empty_table(), 2),
                       doctest::Contains("expected"), error);
  CHECK_THROWS_AS(parse_series("1 + gamma*p", empty_table(), 2), error);
}
