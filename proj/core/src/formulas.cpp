#include "avoidance/formulas.hpp"

#include <algorithm>
#include <vector>

#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"

namespace avoidance::formulas {

namespace {

void require_nonnegative(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("n and k must be nonnegative");
}

// Dense table over [0..n] x [0..k] filled in (n, k) row-major order; reads at
// negative indices are 0.
class Grid {
 public:
  Grid(int n, int k)
      : width_(k + 1),
        values_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k + 1), BigInt(0)) {}

  BigInt operator()(int n, int k) const {
    if (n < 0 || k < 0) return 0;
    return values_[static_cast<std::size_t>(n) * width_ + static_cast<std::size_t>(k)];
  }
  BigInt& at(int n, int k) {
    return values_[static_cast<std::size_t>(n) * width_ + static_cast<std::size_t>(k)];
  }

 private:
  std::size_t width_;
  std::vector<BigInt> values_;
};

template <typename Rule>
BigInt fill(int n, int k, Rule rule) {
  require_nonnegative(n, k);
  Grid grid(n, k);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= k; ++j) grid.at(i, j) = rule(grid, i, j);
  return grid(n, k);
}

BigInt delta(bool condition) { return condition ? 1 : 0; }

// Truncated e^x - 1 divided by x: sum_i x^i / (i+1)!.
Series exp_minus_one_over_x(int order) {
  Series out(order);
  for (int i = 0; i <= order; ++i) out.at(i) = Rational(1) / Rational(factorial(i + 1));
  return out;
}

Series truncated_exponential(int terms, int order) {
  Series out(order);
  for (int j = 0; j < terms && j <= order; ++j) out.at(j) = Rational(1) / Rational(factorial(j));
  return out;
}

}  // namespace

BigInt f11(int n, int k) {
  require_nonnegative(n, k);
  return falling_factorial(k, n);
}

BigInt f12(int n, int k) {
  require_nonnegative(n, k);
  return multiset_count(k, n);
}

bool f123_valid(int n, int k) { return k >= 2 && n >= 2 * (k - 2); }

BigInt f123(int n, int k) {
  require_nonnegative(n, k);
  if (!f123_valid(n, k)) {
    throw OutsideValidity("f123 is claimed only for k >= 2 and n >= 2(k-2)");
  }
  BigInt sum = 0;
  for (int j = 0; j <= k - 2; ++j) sum += a_coeff(k - 2, j) * binomial(n + 2 * j, n);
  mpz_mul_2exp(sum.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n - 2 * (k - 2)));
  return sum;
}

BigInt f111(int n, int k) {
  require_nonnegative(n, k);
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) sum += bessel_first(i, n - i) * falling_factorial(k, i);
  return sum;
}

BigInt f111_egf(int n, int k) { return single_repeat_egf(n, k, 3); }

BigInt f112(int n, int k) {
  require_nonnegative(n, k);
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) sum += multiset_count(k - j, n) * stirling1_unsigned(n, n - j);
  return sum;
}

BigInt rec_112(int n, int k) {
  return fill(n, k, [](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    if (i == 0) return 1;
    if (i == 1) return j;
    return f(i, j - 1) + f(i - 1, j) + BigInt(i - 1) * f(i - 1, j - 1);
  });
}

BigInt g112_ogf(int n, int k) {
  require_nonnegative(n, k);
  return g112_series(n, k)[k].get_num();
}

BigInt f111_112(int n, int k) {
  return fill(n, k, [](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    return f(i, j - 1) + BigInt(i) * f(i - 1, j - 1) + BigInt(i - 1) * f(i - 2, j - 1);
  });
}

BigInt f111_112_double_sum(int n, int k) {
  require_nonnegative(n, k);
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    BigInt inner = 0;
    for (int j = 0; j <= k; ++j) inner += multiset_count(k - j, i) * stirling1_unsigned(i, i - j);
    const BigInt term = binomial(n, i) * inner;
    if ((n - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt rec_112_121(int n, int k) {
  return fill(n, k, [](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    BigInt value = f(i, j - 1) + BigInt(i) * f(i - 1, j - 1);
    for (int t = 2; t <= i; ++t) value += f(i - t, j - 1);
    return value;
  });
}

BigInt rec_112_211(int n, int k) {
  return fill(n, k, [](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    return f(i, j - 1) + BigInt(i) * f(i - 1, j - 1) + f(i - 2, j - 1) + delta(i >= 3);
  });
}

BigInt rec_112_212_literal(int n, int k) {
  return fill(n, k, [](const Grid& a, int i, int j) -> BigInt {
    if (i == 0) return 1;
    if (j == 0) return 0;
    if (j == 1) return 1;
    BigInt value = a(i, j - 1);
    for (int d = 1; d <= i; ++d)
      for (int r = 0; r <= j - 1; ++r)
        for (int t = 0; t <= i - d; ++t) value += a(t, r) * a(i - d - t, j - 1 - r);
    return value;
  });
}

BigInt f112_221(int n, int k) {
  require_nonnegative(n, k);
  if (n == 0) return 1;
  if (n == 1) return k;
  auto weighted = [k](int top) {
    BigInt sum = 0;
    for (int j = 1; j <= top; ++j) sum += BigInt(j) * factorial(j) * binomial(k, j);
    return sum;
  };
  if (n >= k + 1) return weighted(k);
  return factorial(n) * binomial(k, n) + weighted(n - 1);
}

BigInt f121_212(int n, int k) {
  require_nonnegative(n, k);
  if (n == 0) return 1;
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) sum += factorial(j) * binomial(k, j) * binomial(n - 1, j - 1);
  return sum;
}

BigInt f112_121_211(int n, int k) {
  return fill(n, k, [](const Grid& a, int i, int j) -> BigInt {
    if (i == 0) return 1;
    if (j == 0) return 0;
    if (j == 1) return 1;
    if (i == 1) return j;
    return a(i, j - 1) + BigInt(i) * a(i - 1, j - 1) + 1;
  });
}

BigInt f112_121_211_egf(int n, int k) {
  require_nonnegative(n, k);
  const int order = std::max(n, 1);
  const Series one_plus_x_power = pow(Series::polynomial({1, 1}, order), static_cast<unsigned>(k));
  const Series series = Series::polynomial({1}, order) +
                        exp_minus_one_over_x(order) *
                            (one_plus_x_power - Series::polynomial({1}, order));
  return egf_coefficient(series, n);
}

Rational f112_121_211_sum(int n, int k) {
  require_nonnegative(n, k);
  if (n == 0) return 1;
  Rational sum = 0;
  for (int j = 1; j <= n; ++j) {
    sum += Rational(binomial(n + 1, j) * binomial(k, n + 1 - j)) / Rational(factorial(j));
  }
  return sum;
}

BigInt single_repeat_rec(int n, int k, int l) {
  if (l < 1) throw InvalidArgument("<1>_l needs l >= 1");
  return fill(n, k, [l](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    BigInt value = 0;
    for (int t = 0; t <= l - 1; ++t) value += binomial(i, t) * f(i - t, j - 1);
    return value;
  });
}

BigInt single_repeat_partition(int n, int k, int l) {
  require_nonnegative(n, k);
  if (l < 1) throw InvalidArgument("<1>_l needs l >= 1");
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) sum += bounded_partitions(n, i, l - 1) * falling_factorial(k, i);
  return sum;
}

BigInt single_repeat_egf(int n, int k, int l) {
  require_nonnegative(n, k);
  if (l < 1) throw InvalidArgument("<1>_l needs l >= 1");
  return egf_coefficient(pow(truncated_exponential(l, n), static_cast<unsigned>(k)), n);
}

BigInt rec_vml(int n, int k, int m, int l) {
  if (m < 0 || l < 0 || m + l < 1) throw InvalidArgument("v_{m,l} needs m, l >= 0 and m + l >= 1");
  const int p = m + l;
  return fill(n, k, [p](const Grid& f, int i, int j) -> BigInt {
    if (j == 0) return delta(i == 0);
    if (i == 0) return 1;
    if (i == 1) return j;
    // f(i, j) with i = n + 1, n >= 1.
    const int prev = i - 1;
    BigInt value = f(prev, j);
    for (int t = 0; t <= p - 1; ++t) value += binomial(prev, t) * f(i - t, j - 1);
    return value;
  });
}

BigInt f_vp0_k2(int n, int p) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (p < 1) throw InvalidArgument("v_{p,0} needs p >= 1");
  BigInt sum = 0;
  for (int j = 0; j <= p; ++j) sum += binomial(n, j);
  return sum;
}

namespace {

// F_{v_{p,0}}(x; k) through x^order from the recurrence.
Series vp0_series(int p, int k, int order) {
  Series out(order);
  for (int i = 0; i <= order; ++i) out.at(i) = Rational(rec_vml(i, k, p, 0)) / Rational(factorial(i));
  return out;
}

Series vp0_integral_rhs(int p, const Series& previous, IntegralReading reading) {
  const int order = previous.order();
  Series rhs(order);
  for (int j = 0; j <= p - 1; ++j) {
    const int folds = reading == IntegralReading::literal ? p : j;
    Series term = antiderivative(previous, folds) * truncated_exponential(p - j, order);
    rhs = (j % 2 == 0) ? rhs + term : rhs - term;
  }
  return rhs;
}

void require_vp0_args(int p, int k) {
  if (p < 1) throw InvalidArgument("v_{p,0} needs p >= 1");
  if (k < 1) throw OutsideValidity("the integral identity is stated for k >= 1");
}

}  // namespace

Series vp0_integral_identity_residual(int p, int k, int order, IntegralReading reading) {
  require_vp0_args(p, k);
  const Series current = vp0_series(p, k, order);
  const Series lhs = current - antiderivative(current);
  return vp0_integral_rhs(p, vp0_series(p, k - 1, order), reading) - lhs;
}

Rational vp0_integral_identity_count(int n, int k, int p, IntegralReading reading) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  require_vp0_args(p, k);
  const Series rhs = vp0_integral_rhs(p, vp0_series(p, k - 1, n), reading);
  // F - int F = R gives c_0 = r_0 and c_i = r_i + c_{i-1} / i.
  Rational c = rhs[0];
  for (int i = 1; i <= n; ++i) c = rhs[i] + c / Rational(i);
  return c * Rational(factorial(n));
}

namespace {

template <typename Build>
Rational bivariate_count(int n, int k, bool shifted, Build build) {
  require_nonnegative(n, k);
  if (shifted && k < 1) throw OutsideValidity("shifted indexing starts at alphabet size 1");
  const int j = shifted ? k - 1 : k;
  const BiSeries series = build(std::max(n, 1), std::max(j, 1));
  return series(n, j) * Rational(factorial(n));
}

}  // namespace

Rational f112_bivariate_count(int n, int k, bool shifted) {
  return bivariate_count(n, k, shifted, closed_form_F112_biseries);
}

Rational f111_112_bivariate_count(int n, int k, bool shifted) {
  return bivariate_count(n, k, shifted, closed_form_F111_112_biseries);
}

}  // namespace avoidance::formulas
