#include <doctest.h>

#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/formulas.hpp"
#include "avoidance/oracle.hpp"

using namespace avoidance;
namespace f = avoidance::formulas;

namespace {
PatternSet S(const char* text) { return PatternSet::parse(text); }
BigInt oracle(int n, int k, const char* set) { return count_avoiders(n, k, S(set)); }
}  // namespace

TEST_CASE("two-letter patterns") {
  CHECK(f::f12(2, 2) == 3);
  CHECK(f::f11(2, 2) == 2);
  CHECK(f::f11(3, 2) == 0);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= 5; ++k) {
      CHECK(f::f11(n, k) == oracle(n, k, "11"));
      CHECK(f::f12(n, k) == oracle(n, k, "12"));
    }
  }
}

TEST_CASE("123 and 132 inside the validity domain") {
  CHECK(f::f123(3, 3) == 26);
  CHECK(f::f123(2, 3) == 9);
  for (int n = 0; n <= 8; ++n) CHECK(f::f123(n, 2) == BigInt(1) << n);
  CHECK_FALSE(f::f123_valid(1, 3));
  CHECK_FALSE(f::f123_valid(3, 1));
  CHECK_THROWS_AS(f::f123(1, 3), OutsideValidity);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 2; k <= 5; ++k) {
      if (!f::f123_valid(n, k)) continue;
      CHECK(f::f123(n, k) == oracle(n, k, "123"));
      CHECK(f::f123(n, k) == oracle(n, k, "132"));
    }
  }
}

TEST_CASE("111") {
  CHECK(f::f111(2, 2) == 4);
  CHECK(f::f111(3, 1) == 0);
  CHECK(f::f111(4, 2) == 6);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= 5; ++k) {
      CHECK(f::f111(n, k) == oracle(n, k, "111"));
      CHECK(f::f111_egf(n, k) == oracle(n, k, "111"));
    }
  }
}

TEST_CASE("112 and 121") {
  CHECK(f::f112(3, 2) == 7);
  CHECK(f::f112(2, 2) == 4);
  CHECK(f::rec_112(3, 2) == 7);
  for (int n = 0; n <= 6; ++n) CHECK(f::rec_112(n, 0) == (n == 0 ? 1 : 0));
  for (int k = 0; k <= 6; ++k) CHECK(f::rec_112(1, k) == k);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const auto truth = oracle(n, k, "112");
      CHECK(f::f112(n, k) == truth);
      CHECK(f::rec_112(n, k) == truth);
      CHECK(f::g112_ogf(n, k) == truth);
      CHECK(f::f112(n, k) == oracle(n, k, "121"));
    }
  }
}

TEST_CASE("{111,112}") {
  for (int k = 0; k <= 6; ++k) CHECK(f::f111_112(2, k) == k * k);
  // avoiders in [2]^3: 121, 122, 211, 212, 221
  CHECK(f::f111_112(3, 2) == 5);
  CHECK(oracle(3, 2, "111,112") == 5);
  const int ones[] = {1, 1, 1, 0, 0, 0};
  for (int n = 0; n < 6; ++n) CHECK(f::f111_112(n, 1) == ones[n]);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(f::f111_112(n, k) == oracle(n, k, "111,112"));
      CHECK(f::f111_112(n, k) == oracle(n, k, "111,121"));
    }
  }
}

TEST_CASE("the {111,112} double sum is one letter short") {
  CHECK(f::f111_112_double_sum(1, 0) == -1);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 1; k <= 4; ++k) CHECK(f::f111_112_double_sum(n, k) == oracle(n, k - 1, "111,112"));
  }
  for (int k = 0; k <= 4; ++k) CHECK(f::f111_112_double_sum(1, k) == k - 1);
}

TEST_CASE("pairs") {
  CHECK(f::rec_112_121(3, 2) == 6);
  CHECK(f::rec_112_211(3, 2) == 6);
  for (int n = 0; n <= 6; ++n) CHECK(f::rec_112_121(n, 1) == 1);
  CHECK(f::rec_112_212_literal(1, 2) == 3);
  CHECK(oracle(1, 2, "112,212") == 2);
  CHECK(f::f112_221(3, 2) == 6);
  CHECK(f::f112_221(10, 2) == 6);
  CHECK(f::f112_221(2, 3) == 9);
  CHECK(f::f121_212(3, 2) == 6);
  CHECK(f::f121_212(2, 2) == 4);
  for (int n = 1; n <= 6; ++n) CHECK(f::f121_212(n, 1) == 1);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(f::rec_112_121(n, k) == oracle(n, k, "112,121"));
      CHECK(f::rec_112_211(n, k) == oracle(n, k, "112,211"));
      CHECK(f::f112_221(n, k) == oracle(n, k, "112,221"));
      CHECK(f::f121_212(n, k) == oracle(n, k, "121,212"));
    }
  }
}

TEST_CASE("{112,221} stabilizes once n exceeds k") {
  for (int k = 0; k <= 4; ++k) {
    BigInt plateau = 0;
    for (int j = 0; j <= k; ++j) plateau += j * factorial(j) * binomial(k, j);
    for (int n = k + 1; n <= 10; ++n) CHECK(f::f112_221(n, k) == plateau);
  }
}

TEST_CASE("the triple {112,121,211}") {
  CHECK(f::f112_121_211(3, 2) == 5);
  CHECK(f::f112_121_211_egf(3, 2) == 5);
  for (int k = 0; k <= 5; ++k) CHECK(f::f112_121_211(1, k) == k);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(f::f112_121_211(n, k) == oracle(n, k, "112,121,211"));
      CHECK(f::f112_121_211_egf(n, k) == oracle(n, k, "112,121,211"));
    }
  }
  CHECK(f::f112_121_211_sum(2, 1) == Rational(3, 2));
  for (int k = 0; k <= 4; ++k) CHECK(f::f112_121_211_sum(1, k) == 2 * k);
}

TEST_CASE("constant patterns") {
  CHECK(f::single_repeat_rec(2, 2, 2) == 2);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(f::single_repeat_rec(n, k, 1) == (n == 0 ? 1 : 0));
      CHECK(f::single_repeat_rec(n, k, 3) == f::f111(n, k));
    }
  }
  for (int l = 1; l <= 4; ++l) {
    const PatternSet set{make_constant_pattern(l)};
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= 5; ++k) {
        const auto truth = count_avoiders(n, k, set);
        CHECK(f::single_repeat_rec(n, k, l) == truth);
        CHECK(f::single_repeat_partition(n, k, l) == truth);
        CHECK(f::single_repeat_egf(n, k, l) == truth);
      }
    }
  }
}

TEST_CASE("v_{m,l}") {
  CHECK(f::rec_vml(3, 2, 1, 1) == 7);
  CHECK(f::rec_vml(3, 2, 2, 0) == 7);
  for (int n = 0; n <= 6; ++n) CHECK(f::rec_vml(n, 1, 1, 1) == 1);
  for (int total = 1; total <= 3; ++total) {
    for (int m = 0; m <= total; ++m) {
      const PatternSet set{make_vml(m, total - m)};
      for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= 4; ++k) CHECK(f::rec_vml(n, k, m, total - m) == count_avoiders(n, k, set));
      }
    }
  }
}

TEST_CASE("v_{p,0} with two letters") {
  CHECK(f::f_vp0_k2(3, 2) == 7);
  for (int n = 0; n <= 10; ++n) CHECK(f::f_vp0_k2(n, 1) == n + 1);
  for (int n = 0; n <= 6; ++n) CHECK(f::f_vp0_k2(n, n + 1) == BigInt(1) << n);
  for (int p = 1; p <= 3; ++p) {
    for (int n = 0; n <= 10; ++n) CHECK(f::f_vp0_k2(n, p) == count_avoiders(n, 2, PatternSet{make_vml(p, 0)}));
  }
}

TEST_CASE("the integral identity holds per summand only") {
  for (int p = 1; p <= 3; ++p) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(f::vp0_integral_identity_residual(p, k, 8, f::IntegralReading::per_summand).is_zero());
      CHECK_FALSE(f::vp0_integral_identity_residual(p, k, 8, f::IntegralReading::literal).is_zero());
      for (int n = 0; n <= 7; ++n) {
        CHECK(f::vp0_integral_identity_count(n, k, p, f::IntegralReading::per_summand) ==
              Rational(count_avoiders(n, k, PatternSet{make_vml(p, 0)})));
      }
    }
  }
}

TEST_CASE("bivariate counts") {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(f::f112_bivariate_count(n, k, true) == Rational(oracle(n, k, "112")));
      CHECK(f::f111_112_bivariate_count(n, k, false) == Rational(oracle(n, k, "111,112")));
    }
  }
  CHECK(f::f112_bivariate_count(1, 1, false) == 2);
  CHECK_THROWS_AS(f::f112_bivariate_count(1, 0, true), OutsideValidity);
}
