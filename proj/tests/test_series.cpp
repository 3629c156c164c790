#include <doctest.h>

#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/oracle.hpp"
#include "avoidance/series.hpp"

using namespace avoidance;

namespace {
const Rational half(1, 2);
PatternSet S(const char* text) { return PatternSet::parse(text); }
}  // namespace

TEST_CASE("arithmetic") {
  const auto one_plus_x = Series::polynomial({1, 1}, 3);
  const auto sq = one_plus_x * one_plus_x;
  CHECK(sq == Series::polynomial({1, 2, 1, 0}, 3));
  CHECK((one_plus_x * Series(3)).is_zero());
  CHECK(pow(one_plus_x, 0) == Series::polynomial({1}, 3));
  CHECK(pow(one_plus_x, 3) == Series::polynomial({1, 3, 3, 1}, 3));
  CHECK((one_plus_x - one_plus_x).is_zero());
  CHECK((Series::polynomial({1, 1}, 5) * Series::polynomial({1}, 2)).order() == 2);
  CHECK(one_plus_x[-1] == 0);
  CHECK_THROWS_AS(one_plus_x[4], InvalidArgument);
}

TEST_CASE("the 111 generating function against the oracle") {
  const auto base = Series::polynomial({1, 1, half}, 8);
  for (int k = 0; k <= 5; ++k) {
    const auto f = pow(base, static_cast<unsigned>(k));
    for (int n = 0; n <= 8; ++n) CHECK(egf_coefficient(f, n) == count_avoiders(n, k, S("111")));
  }
  CHECK(egf_coefficient(pow(base, 2), 2) == 4);
}

TEST_CASE("calculus") {
  const auto e = exp_series(6);
  const auto integral = antiderivative(e);
  CHECK(integral.order() == 6);
  CHECK(integral == e - Series::polynomial({1}, 6));
  CHECK(antiderivative(e, 0) == e);
  CHECK(antiderivative(e, 2) == antiderivative(antiderivative(e)));
  const auto s = Series::polynomial({3, -1, half, 7}, 5);
  CHECK(differentiate(antiderivative(s)) == s.truncated(4));
  CHECK(differentiate(e) == e.truncated(5));
  CHECK_THROWS_AS(differentiate(Series(0)), InvalidArgument);
}

TEST_CASE("exp, log, reciprocal") {
  const auto x = Series::polynomial({0, 1}, 4);
  CHECK(exp_of(x) == Series::polynomial({1, 1, half, Rational(1, 6), Rational(1, 24)}, 4));
  const auto one_plus_x = Series::polynomial({1, 1}, 6);
  CHECK(exp_of(log_of(one_plus_x)) == one_plus_x);
  const auto geometric = reciprocal(Series::polynomial({1, -1}, 6));
  for (int i = 0; i <= 6; ++i) CHECK(geometric[i] == 1);
  const auto l = log_of(geometric);
  CHECK(l[0] == 0);
  for (int i = 1; i <= 6; ++i) CHECK(l[i] == Rational(1, i));
  CHECK_THROWS_AS(exp_of(one_plus_x), InvalidArgument);
  CHECK_THROWS_AS(log_of(x), InvalidArgument);
  CHECK_THROWS_AS(reciprocal(x), InvalidArgument);
}

TEST_CASE("egf coefficients") {
  const auto e = exp_series(8);
  for (int n = 0; n <= 8; ++n) CHECK(egf_coefficient(e, n) == 1);
  const auto f = e * Series::polynomial({1, 1, half}, 8);
  CHECK(egf_coefficient(f, 3) == 7);
  CHECK(egf_coefficient(f, 3) == count_avoiders(3, 2, S("112")));
  CHECK_THROWS_AS(egf_coefficient(Series::polynomial({0, half}, 2), 1), InvalidArgument);
  CHECK_THROWS_AS(egf_coefficient(e, 9), InvalidArgument);
}

TEST_CASE("the 112 ordinary generating function in y") {
  const auto g2 = g112_series(2, 3);
  CHECK(g2 == Series::polynomial({0, 1, 4, 9}, 3));
  const auto g1 = g112_series(1, 6);
  for (int k = 0; k <= 6; ++k) CHECK(g1[k] == k);
  CHECK(g112_series(3, 2)[2] == 7);
  for (int k = 0; k <= 6; ++k) CHECK(g112_series(0, 6)[k] == 1);
  for (int n = 0; n <= 6; ++n) {
    const auto g = g112_series(n, 6);
    for (int k = 0; k <= 6; ++k) CHECK(g[k] == Rational(count_avoiders(n, k, S("112"))));
  }
}

TEST_CASE("bivariate closed form for 112") {
  const auto F = closed_form_F112_biseries(6, 3);
  // [y^0] is e^x, which is F_112(x;1): the y index is the alphabet size minus one.
  CHECK(F.y_coefficient(0) == exp_series(6));
  CHECK(F(3, 1) * 6 == 7);
  for (int j = 0; j <= 3; ++j) CHECK(F(0, j) == 1);  // F(0, y) = 1/(1-y)
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(F(n, k) * Rational(factorial(n)) == Rational(count_avoiders(n, k + 1, S("112"))));
    }
  }
}

TEST_CASE("bivariate closed form for {111,112}") {
  const auto F = closed_form_F111_112_biseries(6, 3);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(F(n, k) * Rational(factorial(n)) == Rational(count_avoiders(n, k, S("111,112"))));
    }
  }
}

TEST_CASE("bivariate arithmetic") {
  const auto x = BiSeries::from_x(Series::polynomial({0, 1}, 4), 3);
  const auto y = BiSeries::from_y(Series::polynomial({0, 1}, 3), 4);
  const auto xy = x * y;
  CHECK(xy(1, 1) == 1);
  CHECK(xy(0, 0) == 0);
  const auto one = BiSeries::from_x(Series::polynomial({1}, 4), 3);
  const auto r = reciprocal(one - xy);
  for (int i = 0; i <= 3; ++i) CHECK(r(i, i) == 1);
  CHECK(r(1, 0) == 0);
  CHECK(exp_of(log_of(one + x + y)) == (one + x + y));
  CHECK(divide_by_y(xy).order_y() == 2);
  CHECK(divide_by_y(xy)(1, 0) == 1);
  CHECK_THROWS_AS(divide_by_y(one), InvalidArgument);
}
